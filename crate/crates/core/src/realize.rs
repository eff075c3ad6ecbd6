//! Maximum-arc realization of imbalance sequences.
//!
//! A vertex with target imbalance `t` in a digraph of order `n` can have at
//! most `floor((n - 1 + t) / 2)` out-arcs; a realization meeting that bound
//! at every vertex has the maximum possible number of arcs, and every vertex
//! misses at most one other vertex. Vertices whose `t` has the parity of
//! `n - 1` are joined to everyone; the others are paired off as mutual
//! non-neighbours.
//!
//! Vertices are processed in sequence order. Each one is joined to every
//! later vertex (except its non-neighbour, if it needs one): the later
//! vertices with the smallest residual imbalance receive its out-arcs and
//! the rest send arcs to it. Ties go to the lowest vertex id. Should the
//! greedy pass leave an outdegree off target, arcs along directed paths are
//! reversed until every outdegree matches.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::sequences::{digraph_imbalance_violation, ImbalanceSequence, SequenceViolation};

/// A maximum-arc realization together with its structural summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub graph: Digraph,
    pub arc_count: usize,
    pub is_tournament: bool,
    pub is_near_tournament: bool,
    /// Unjoined pairs `(a, b)` with `a < b`, sorted by `a`.
    pub non_neighbour_pairing: Vec<(usize, usize)>,
}

fn out_target(n: i64, t: i64) -> i64 {
    (n - 1 + t).div_euclid(2)
}

/// `sum floor((n - 1 + t_i) / 2)`.
pub fn max_arc_count(t: &ImbalanceSequence) -> Result<usize> {
    if let Some(j) = first_failure(t) {
        return Err(Error::NotDigraphic(j));
    }
    let n = t.len() as i64;
    Ok(t.entries().iter().map(|&v| out_target(n, v)).sum::<i64>() as usize)
}

fn first_failure(t: &ImbalanceSequence) -> Option<usize> {
    match digraph_imbalance_violation(t)? {
        SequenceViolation::Prefix { j } => Some(j),
        _ => Some(t.len()),
    }
}

/// Realize `t` as a simple digraph with the maximum number of arcs.
/// Vertex `i` receives imbalance `t[i]`.
pub fn max_realization(t: &ImbalanceSequence) -> Result<RealizationReport> {
    if let Some(j) = first_failure(t) {
        return Err(Error::NotDigraphic(j));
    }
    let n = t.len();
    let ni = n as i64;
    let targets: Vec<i64> = t.entries().iter().map(|&v| out_target(ni, v)).collect();

    let mut graph = Digraph::new(n);
    let mut out_left: Vec<i64> = targets.clone();
    let mut in_left: Vec<i64> = t
        .entries()
        .iter()
        .zip(&targets)
        .map(|(&v, &o)| o - v)
        .collect();
    let mut needs_skip: Vec<bool> = t
        .entries()
        .iter()
        .map(|&v| (ni - 1 + v).rem_euclid(2) == 1)
        .collect();
    let mut pairing = Vec::new();

    // Unprocessed vertices ordered by (residual imbalance, id).
    let mut order: Vec<usize> = (0..n).collect();
    let residual = |out_left: &[i64], in_left: &[i64], w: usize| out_left[w] - in_left[w];
    order.sort_by_key(|&w| (residual(&out_left, &in_left, w), w));

    for v in 0..n {
        let pos = order
            .iter()
            .position(|&w| w == v)
            .expect("unprocessed vertex");
        order.remove(pos);
        let want_out = out_left[v].max(0) as usize;

        let skipped = if needs_skip[v] {
            let (p, u) = order
                .iter()
                .enumerate()
                .filter(|&(_, &w)| needs_skip[w])
                .min_by_key(|&(p, _)| (p.abs_diff(want_out), p))
                .map(|(p, &w)| (p, w))
                .ok_or_else(|| {
                    Error::RealizationFailed(format!("no non-neighbour available for vertex {v}"))
                })?;
            order.remove(p);
            needs_skip[v] = false;
            needs_skip[u] = false;
            pairing.push((v.min(u), v.max(u)));
            Some(u)
        } else {
            None
        };

        let split = want_out.min(order.len());
        for &w in &order[..split] {
            graph.add_arc(v, w)?;
            in_left[w] -= 1;
        }
        for &w in &order[split..] {
            graph.add_arc(w, v)?;
            out_left[w] -= 1;
        }
        out_left[v] = 0;
        in_left[v] = 0;

        // Both halves stay sorted after the uniform shift, so this is a
        // merge of at most three runs.
        order.extend(skipped);
        order.sort_by_key(|&w| (residual(&out_left, &in_left, w), w));
    }

    repair_outdegrees(&mut graph, &targets)?;
    pairing.sort_unstable();

    let report = RealizationReport {
        arc_count: graph.arc_count(),
        is_tournament: graph.is_tournament(),
        is_near_tournament: graph.is_near_tournament(),
        non_neighbour_pairing: pairing,
        graph,
    };
    if !verify_realization(t, &report) {
        return Err(Error::RealizationFailed(
            "result does not realize the sequence".into(),
        ));
    }
    Ok(report)
}

/// Reverse directed paths from vertices above their outdegree target to
/// vertices below it. Reversal keeps every pair's joined/unjoined state.
fn repair_outdegrees(graph: &mut Digraph, targets: &[i64]) -> Result<()> {
    let n = graph.order();
    let excess = |g: &Digraph, v: usize| g.out_degree(v) as i64 - targets[v];
    let mut repairs = 0usize;
    while let Some(start) = (0..n).find(|&v| excess(graph, v) > 0) {
        let mut parent = vec![usize::MAX; n];
        parent[start] = start;
        let mut queue = VecDeque::from([start]);
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if excess(graph, u) < 0 {
                end = Some(u);
                break;
            }
            for w in graph.out_neighbours(u).collect::<Vec<_>>() {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let Some(mut w) = end else {
            return Err(Error::RealizationFailed(format!(
                "no augmenting path from vertex {start}"
            )));
        };
        while w != start {
            let u = parent[w];
            graph.reverse_arc(u, w);
            w = u;
        }
        repairs += 1;
    }
    if repairs > 0 {
        log::warn!("greedy realization needed {repairs} path reversal(s)");
    }
    Ok(())
}

/// Check that `r` realizes `t` and that its summary fields agree with its graph.
pub fn verify_realization(t: &ImbalanceSequence, r: &RealizationReport) -> bool {
    let g = &r.graph;
    if g.imbalance_sequence() != *t
        || r.arc_count != g.arc_count()
        || r.is_tournament != g.is_tournament()
        || r.is_near_tournament != g.is_near_tournament()
    {
        return false;
    }
    let n = g.order();
    let mut covered = vec![false; n];
    for &(a, b) in &r.non_neighbour_pairing {
        if a >= b || b >= n || g.is_joined(a, b) || covered[a] || covered[b] {
            return false;
        }
        covered[a] = true;
        covered[b] = true;
    }
    (0..n).all(|v| {
        let missing = n - 1 - g.out_degree(v) - g.in_degree(v);
        missing == usize::from(covered[v])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{canonical_sequence, ImbalanceSet};

    fn seq(v: &[i64]) -> ImbalanceSequence {
        ImbalanceSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn arc_count_examples() {
        assert_eq!(max_arc_count(&seq(&[2, 0, -2])).unwrap(), 3);
        assert_eq!(max_arc_count(&seq(&[0, 0, 0, 0])).unwrap(), 4);
        let z = ImbalanceSet::new([4, 2, -2]).unwrap();
        assert_eq!(max_arc_count(&canonical_sequence(&z).unwrap()).unwrap(), 40);
        assert_eq!(
            max_arc_count(&seq(&[3, -1, -1])),
            Err(Error::NotDigraphic(1))
        );
    }

    #[test]
    fn transitive_triangle() {
        let r = max_realization(&seq(&[2, 0, -2])).unwrap();
        assert!(r.is_tournament && !r.is_near_tournament);
        assert_eq!(
            r.graph.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert!(r.non_neighbour_pairing.is_empty());
    }

    #[test]
    fn four_cycle() {
        let r = max_realization(&seq(&[0, 0, 0, 0])).unwrap();
        assert_eq!(r.arc_count, 4);
        assert!(r.is_near_tournament);
        assert_eq!(r.non_neighbour_pairing, vec![(0, 2), (1, 3)]);
        assert_eq!(
            r.graph.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 0)]
        );
    }

    #[test]
    fn near_tournament_for_even_canonical() {
        let z = ImbalanceSet::new([4, 2, -2]).unwrap();
        let t = canonical_sequence(&z).unwrap();
        let r = max_realization(&t).unwrap();
        assert_eq!(r.graph.order(), 10);
        assert_eq!(r.arc_count, 40);
        assert!(r.is_near_tournament);
        assert_eq!(r.non_neighbour_pairing.len(), 5);
    }

    #[test]
    fn mixed_parity_sequence_sets_neither_flag() {
        // n = 4: 1 and -1 match the parity of n - 1, the zeros do not.
        let t = seq(&[1, 0, 0, -1]);
        let r = max_realization(&t).unwrap();
        assert!(!r.is_tournament && !r.is_near_tournament);
        assert_eq!(r.non_neighbour_pairing.len(), 1);
        assert_eq!(r.arc_count, 5);
    }

    #[test]
    fn verification_rejects_mismatch() {
        let r = max_realization(&seq(&[2, 0, -2])).unwrap();
        assert!(verify_realization(&seq(&[2, 0, -2]), &r));
        assert!(!verify_realization(&seq(&[0, 0, 0]), &r));
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let report = RealizationReport {
            arc_count: 4,
            is_tournament: false,
            is_near_tournament: true,
            non_neighbour_pairing: vec![(0, 2), (1, 3)],
            graph: c4,
        };
        assert!(verify_realization(&seq(&[0, 0, 0, 0]), &report));
        let mut bad = report.clone();
        bad.non_neighbour_pairing = vec![(0, 1)];
        assert!(!verify_realization(&seq(&[0, 0, 0, 0]), &bad));
    }

    #[test]
    fn invalid_sequence_rejected() {
        assert_eq!(
            max_realization(&seq(&[3, -1, -1])),
            Err(Error::NotDigraphic(1))
        );
        assert_eq!(max_realization(&seq(&[1, 1])), Err(Error::NotDigraphic(2)));
    }

    #[test]
    fn empty_and_single() {
        let r = max_realization(&seq(&[])).unwrap();
        assert_eq!(r.graph.order(), 0);
        let r = max_realization(&seq(&[0])).unwrap();
        assert!(r.is_tournament);
    }
}
