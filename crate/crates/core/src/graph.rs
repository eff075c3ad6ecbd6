//! Dense oriented graphs.
//!
//! A [`Digraph`] stores one bit per ordered pair `(u, v)` meaning "arc from
//! `u` to `v`". A pair `{u, v}` therefore has three states: unjoined,
//! `u -> v`, or `v -> u`. Insertion refuses self-loops and refuses to join a
//! pair twice, so every value is an orientation of a simple graph.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::{ImbalanceSequence, ImbalanceSet, ScoreSequence};

const WORD: usize = u64::BITS as usize;

/// An orientation of a simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    arcs: usize,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Self {
            n,
            words,
            out: vec![0; n * words],
            out_deg: vec![0; n],
            in_deg: vec![0; n],
            arcs: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    fn bit(&self, u: usize, v: usize) -> bool {
        self.out[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.out[u * self.words + v / WORD];
        if on {
            *w |= 1 << (v % WORD);
        } else {
            *w &= !(1 << (v % WORD));
        }
    }

    /// Insert the arc `u -> v`. Fails if either endpoint is out of range,
    /// `u == v`, or the pair is already joined in either direction.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.bit(u, v) || self.bit(v, u) {
            return Err(Error::PairAlreadyJoined(u, v));
        }
        self.set_bit(u, v, true);
        self.out_deg[u] += 1;
        self.in_deg[v] += 1;
        self.arcs += 1;
        Ok(())
    }

    /// Turn an existing arc `u -> v` into `v -> u`.
    pub(crate) fn reverse_arc(&mut self, u: usize, v: usize) {
        debug_assert!(self.bit(u, v));
        self.set_bit(u, v, false);
        self.set_bit(v, u, true);
        self.out_deg[u] -= 1;
        self.in_deg[u] += 1;
        self.out_deg[v] += 1;
        self.in_deg[v] -= 1;
    }

    /// True iff the arc `u -> v` is present. Out-of-range ids yield false.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bit(u, v)
    }

    /// True iff `u` and `v` are joined by an arc in either direction.
    pub fn is_joined(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg[v]
    }

    /// Out-neighbours of `u` in increasing order.
    pub fn out_neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.out[u * self.words..(u + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// All arcs, sorted by `(source, target)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbours(u).map(move |v| (u, v)))
    }

    /// Vertices other than `v` not joined to `v`, in increasing order.
    pub fn non_neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&w| w != v && !self.is_joined(v, w))
            .collect()
    }

    fn non_neighbour_count(&self, v: usize) -> usize {
        self.n - 1 - self.out_deg[v] - self.in_deg[v]
    }

    /// Outdegree minus indegree of `v`.
    pub fn imbalance_of(&self, v: usize) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self.out_deg[v] as i64 - self.in_deg[v] as i64)
    }

    /// Imbalances indexed by vertex id.
    pub fn imbalances(&self) -> Vec<i64> {
        (0..self.n)
            .map(|v| self.out_deg[v] as i64 - self.in_deg[v] as i64)
            .collect()
    }

    /// All imbalances in nonincreasing order.
    pub fn imbalance_sequence(&self) -> ImbalanceSequence {
        ImbalanceSequence::sorted_from(self.imbalances())
    }

    pub fn imbalance_set(&self) -> ImbalanceSet {
        let members: BTreeSet<i64> = self.imbalances().into_iter().collect();
        ImbalanceSet::from_set(members)
    }

    /// Every pair of distinct vertices carries exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.arcs == self.n * self.n.saturating_sub(1) / 2
    }

    /// Even order at least 2, and every vertex misses exactly one other vertex.
    pub fn is_near_tournament(&self) -> bool {
        self.n >= 2 && self.n.is_multiple_of(2) && (0..self.n).all(|v| self.non_neighbour_count(v) == 1)
    }

    /// Outdegrees in nondecreasing order.
    pub fn score_sequence(&self) -> Result<ScoreSequence> {
        if !self.is_tournament() {
            return Err(Error::NotATournament);
        }
        let mut scores: Vec<i64> = self.out_deg.iter().map(|&d| d as i64).collect();
        scores.sort_unstable();
        ScoreSequence::new(scores)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}
