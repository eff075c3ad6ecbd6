//! Deciding and realizing tournament imbalance sets.
//!
//! The pipeline for a set `Z = X ∪ Y` (`X` the non-negative members, `Y`
//! the negative ones):
//!
//! 1. `Z = {0}` is realized by the single-vertex tournament.
//! 2. Otherwise `Z` needs a positive and a negative member, and all members
//!    must share one parity.
//! 3. Odd members: the canonical sequence of length `n = l*M + m*L` is a
//!    tournament imbalance sequence and its maximum-arc realization is the
//!    certificate.
//! 4. Even members: the canonical sequence realizes as a near tournament.
//!    If `0 ∈ Z` one apex vertex completes it. Otherwise a minimal
//!    odd-length equal-sum witness supplies `a + b` new vertices, which are
//!    attached by [`add_arcs`]. No witness means no tournament.

use std::fmt;

use crate::equalsum::{min_odd_equal_sum, EqualSumWitness};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::realize::{max_realization, RealizationReport};
use crate::sequences::{canonical_sequence, ImbalanceSet};

/// Why a set is not a tournament imbalance set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refusal {
    /// No positive member or no negative member (and `Z != {0}`).
    OneSided,
    /// Members of both parities.
    MixedParity,
    /// Even members without 0 admitting no odd-length zero-sum sequence.
    NoOddEqualSum,
}

impl Refusal {
    pub fn as_str(self) -> &'static str {
        match self {
            Refusal::OneSided => "one-sided",
            Refusal::MixedParity => "mixed-parity",
            Refusal::NoOddEqualSum => "no-odd-equal-sum",
        }
    }
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TisOptions {
    /// Largest canonical order `n = l*M + m*L` the pipeline will attempt.
    pub max_n: u64,
}

impl Default for TisOptions {
    fn default() -> Self {
        Self { max_n: 1_000_000 }
    }
}

/// How a realizable set gets its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `Z = {0}`: one vertex.
    Single,
    /// Odd members: maximum-arc realization of the canonical sequence.
    Odd,
    /// Even members including 0: near tournament plus an apex.
    Apex,
    /// Even members without 0: near tournament plus `a + b` new vertices.
    AddArcs(EqualSumWitness),
}

/// Verdict on a candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TisDecision {
    Yes {
        certificate: Digraph,
        construction: Construction,
    },
    No {
        refusal: Refusal,
    },
}

impl TisDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, TisDecision::Yes { .. })
    }

    pub fn certificate(&self) -> Option<&Digraph> {
        match self {
            TisDecision::Yes { certificate, .. } => Some(certificate),
            TisDecision::No { .. } => None,
        }
    }

    pub fn refusal(&self) -> Option<Refusal> {
        match self {
            TisDecision::Yes { .. } => None,
            TisDecision::No { refusal } => Some(*refusal),
        }
    }

    /// Order of the certificate, when there is one.
    pub fn order(&self) -> Option<usize> {
        self.certificate().map(Digraph::order)
    }
}

/// Run the sign, parity and equal-sum checks without building anything.
/// Odd sets are settled by a single scan over the members.
pub fn classify(
    z: &ImbalanceSet,
    opts: &TisOptions,
) -> Result<std::result::Result<Construction, Refusal>> {
    if z.is_empty() {
        return Err(Error::EmptySet);
    }
    if z.is_zero_only() {
        return Ok(Ok(Construction::Single));
    }
    if !z.has_both_signs() {
        return Ok(Err(Refusal::OneSided));
    }
    let odd = z.all_odd();
    if !odd && !z.all_even() {
        return Ok(Err(Refusal::MixedParity));
    }
    let n = z.canonical_order()?;
    if n > opts.max_n as u128 {
        return Err(Error::ResourceCap {
            required: n,
            cap: opts.max_n,
        });
    }
    if odd {
        return Ok(Ok(Construction::Odd));
    }
    match min_odd_equal_sum(z.non_negative(), z.negative_magnitudes())? {
        None => Ok(Err(Refusal::NoOddEqualSum)),
        Some(w) if w.ys.is_empty() && w.xs == [0] => Ok(Ok(Construction::Apex)),
        Some(w) => Ok(Ok(Construction::AddArcs(w))),
    }
}

pub fn decide_tis(z: &ImbalanceSet) -> Result<TisDecision> {
    decide_tis_with(z, &TisOptions::default())
}

/// Decide `z` and, when it is realizable, build and verify a certificate.
pub fn decide_tis_with(z: &ImbalanceSet, opts: &TisOptions) -> Result<TisDecision> {
    let construction = match classify(z, opts)? {
        Ok(c) => c,
        Err(refusal) => return Ok(TisDecision::No { refusal }),
    };
    let certificate = build(z, &construction)?;
    if !certificate.is_tournament() || certificate.imbalance_set() != *z {
        return Err(Error::ConstructionInvariant(format!(
            "certificate for {z} does not realize it"
        )));
    }
    let bound = order_bound_for(z, &construction)?;
    if certificate.order() as u128 > bound {
        return Err(Error::ConstructionInvariant(format!(
            "certificate order {} exceeds bound {bound}",
            certificate.order()
        )));
    }
    Ok(TisDecision::Yes {
        certificate,
        construction,
    })
}

/// A tournament whose imbalance set is `z`.
pub fn realize_imbalance_set(z: &ImbalanceSet) -> Result<Digraph> {
    realize_imbalance_set_with(z, &TisOptions::default())
}

pub fn realize_imbalance_set_with(z: &ImbalanceSet, opts: &TisOptions) -> Result<Digraph> {
    match decide_tis_with(z, opts)? {
        TisDecision::Yes { certificate, .. } => Ok(certificate),
        TisDecision::No { refusal } => Err(Error::NotRealizable(refusal)),
    }
}

fn build(z: &ImbalanceSet, construction: &Construction) -> Result<Digraph> {
    if let Construction::Single = construction {
        return Ok(Digraph::new(1));
    }
    let report = max_realization(&canonical_sequence(z)?)?;
    match construction {
        Construction::Single => unreachable!(),
        Construction::Odd => {
            if !report.is_tournament {
                return Err(Error::ConstructionInvariant(
                    "odd canonical realization is not a tournament".into(),
                ));
            }
            Ok(report.graph)
        }
        Construction::Apex => add_apex_zero(&report),
        Construction::AddArcs(w) => add_arcs(&report, w),
    }
}

/// Upper bound on the order of the certificate built for `z`.
pub fn order_upper_bound(z: &ImbalanceSet) -> Result<u128> {
    order_upper_bound_with(z, &TisOptions::default())
}

pub fn order_upper_bound_with(z: &ImbalanceSet, opts: &TisOptions) -> Result<u128> {
    match classify(z, opts)? {
        Ok(c) => order_bound_for(z, &c),
        Err(refusal) => Err(Error::NotRealizable(refusal)),
    }
}

fn order_bound_for(z: &ImbalanceSet, construction: &Construction) -> Result<u128> {
    let n = || z.canonical_order();
    Ok(match construction {
        Construction::Single => 1,
        Construction::Odd => n()?,
        Construction::Apex => n()? + 1,
        Construction::AddArcs(_) => 2 * n()? - 1,
    })
}

fn copy_into(near: &Digraph, order: usize) -> Digraph {
    let mut g = Digraph::new(order);
    for (u, v) in near.arcs() {
        g.add_arc(u, v).expect("copying a valid digraph");
    }
    g
}

fn check_completion(near: &Digraph, out: &Digraph, new_imbalances: &[i64]) -> Result<()> {
    let n = near.order();
    let before = near.imbalances();
    let after = out.imbalances();
    if after[..n] != before[..] {
        return Err(Error::ConstructionInvariant(
            "imbalances of the original vertices changed".into(),
        ));
    }
    if after[n..] != *new_imbalances {
        return Err(Error::ConstructionInvariant(format!(
            "new vertices carry {:?}, expected {new_imbalances:?}",
            &after[n..]
        )));
    }
    if !out.is_tournament() {
        return Err(Error::ConstructionInvariant(
            "completion is not a tournament".into(),
        ));
    }
    Ok(())
}

fn require_near(near: &RealizationReport) -> Result<()> {
    if !near.graph.is_near_tournament()
        || near.non_neighbour_pairing.len() * 2 != near.graph.order()
    {
        return Err(Error::NotANearTournament);
    }
    Ok(())
}

/// Complete a near tournament with one vertex of imbalance 0: for each
/// unjoined pair `(a, b)` insert `a -> b`, `b -> apex` and `apex -> a`.
pub fn add_apex_zero(near: &RealizationReport) -> Result<Digraph> {
    require_near(near)?;
    let n = near.graph.order();
    let mut g = copy_into(&near.graph, n + 1);
    for &(a, b) in &near.non_neighbour_pairing {
        g.add_arc(a, b)?;
        g.add_arc(b, n)?;
        g.add_arc(n, a)?;
    }
    check_completion(&near.graph, &g, &[0])?;
    Ok(g)
}

/// Complete a near tournament of order `n` with `a + b` new vertices whose
/// imbalances are `w.xs` and `-w.ys`, where `a + b` is odd.
///
/// New vertex ids are `n..n + a + b`: the `xs` vertices first, then the
/// `ys` vertices. The new vertices form a rotational regular tournament.
/// Each positive vertex `u` for `x` claims `x / 2` unjoined pairs `(v, v')`
/// and beats both endpoints; each negative vertex for `y` claims `y / 2`
/// pairs and loses to both endpoints. Claims are dealt out pair by pair in
/// pairing order, wrapping around when the witness needs more than `n / 2`
/// pairs, so a pair claimed by `p` positive vertices is claimed by exactly
/// `p` negative ones. Every pair then gets the arc `v -> v'`, and the new
/// vertices that did not claim it (an odd number `r`) are split into
/// `(r - 1) / 2` with `u -> v, v' -> u`, `(r - 1) / 2` with `v -> u, u -> v'`,
/// and one more with `u -> v, v' -> u`. Imbalances of `v` and `v'` are
/// unchanged overall.
pub fn add_arcs(near: &RealizationReport, w: &EqualSumWitness) -> Result<Digraph> {
    require_near(near)?;
    let k = w.total_len();
    if k.is_multiple_of(2) {
        return Err(Error::InvalidWitness("combined length must be odd"));
    }
    let positive = |v: &i64| *v > 0 && v % 2 == 0;
    if !w.xs.iter().all(positive) || !w.ys.iter().all(positive) {
        return Err(Error::InvalidWitness("entries must be positive and even"));
    }
    let sum_x: i64 = w.xs.iter().sum();
    if sum_x != w.ys.iter().sum::<i64>() || sum_x != w.common_sum {
        return Err(Error::InvalidWitness("sides have different sums"));
    }

    let n = near.graph.order();
    let pairs = &near.non_neighbour_pairing;
    let units = (sum_x / 2) as usize;
    let half = (k - 1) / 2;
    let widest =
        w.xs.iter()
            .chain(&w.ys)
            .map(|&v| (v / 2) as usize)
            .max()
            .unwrap_or(0);
    if widest > pairs.len() || units.div_ceil(pairs.len()) > half {
        return Err(Error::InvalidWitness(
            "witness needs more unjoined pairs than the near tournament has",
        ));
    }

    let mut g = copy_into(&near.graph, n + k);
    for i in 0..k {
        for d in 1..=half {
            g.add_arc(n + i, n + (i + d) % k)?;
        }
    }

    let owners = |values: &[i64], first_id: usize| -> Vec<usize> {
        values
            .iter()
            .enumerate()
            .flat_map(|(j, &v)| std::iter::repeat_n(first_id + j, (v / 2) as usize))
            .collect()
    };
    let pos_owner = owners(&w.xs, n);
    let neg_owner = owners(&w.ys, n + w.xs.len());
    let mut claimed: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
    for unit in 0..units {
        claimed[unit % pairs.len()].push(pos_owner[unit]);
        claimed[unit % pairs.len()].push(neg_owner[unit]);
    }

    let first_negative = n + w.xs.len();
    let mut is_claimant = vec![false; k];
    for (&(v, v2), claimants) in pairs.iter().zip(&claimed) {
        g.add_arc(v, v2)?;
        for &u in claimants {
            is_claimant[u - n] = true;
            if u < first_negative {
                g.add_arc(u, v)?;
                g.add_arc(u, v2)?;
            } else {
                g.add_arc(v, u)?;
                g.add_arc(v2, u)?;
            }
        }
        let rest: Vec<usize> = (n..n + k).filter(|&u| !is_claimant[u - n]).collect();
        for &u in claimants {
            is_claimant[u - n] = false;
        }
        let h = (rest.len() - 1) / 2;
        for (j, &u) in rest.iter().enumerate() {
            if j >= h && j < 2 * h {
                g.add_arc(v, u)?;
                g.add_arc(u, v2)?;
            } else {
                g.add_arc(u, v)?;
                g.add_arc(v2, u)?;
            }
        }
    }

    let expected: Vec<i64> =
        w.xs.iter()
            .copied()
            .chain(w.ys.iter().map(|&y| -y))
            .collect();
    check_completion(&near.graph, &g, &expected)?;
    Ok(g)
}
