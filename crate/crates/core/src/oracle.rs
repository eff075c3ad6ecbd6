//! Brute-force ground truth.
//!
//! Nothing in the decision pipeline calls into this module; it exists so
//! tests can compare the constructive routines against exhaustive search.
//! [`enumerate_tournaments`] is the bottom tier. [`brute_min_order`] works at
//! the sequence level through the tournament imbalance characterization,
//! which the tests check against the enumeration for small orders.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::sequences::{check_tournament_imbalance, ImbalanceSequence, ImbalanceSet};

/// Limits on the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest tournament order to enumerate; at most 7 (2^21 tournaments).
    pub max_order: usize,
    pub max_sequence_length: usize,
    pub max_abs_value: i64,
}

impl EnumerationBudget {
    pub const MAX_ORDER: usize = 7;
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_order: Self::MAX_ORDER,
            max_sequence_length: 64,
            max_abs_value: 64,
        }
    }
}

/// Every labeled tournament on `n` vertices, once each.
///
/// Pairs `(i, j)` with `i < j` are numbered lexicographically; bit `p` of
/// the stream index orients pair `p` as `j -> i` when set and `i -> j`
/// otherwise.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n == 0 || n > EnumerationBudget::MAX_ORDER {
        return Err(Error::OutsideBudget {
            order: n,
            max: EnumerationBudget::MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Digraph::new(n);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let (u, v) = if mask >> p & 1 == 1 { (j, i) } else { (i, j) };
            g.add_arc(u, v).expect("fresh pair");
        }
        g
    }))
}

/// Count vectors `c` over `values` with `sum c = len` and `sum c_i * v_i = 0`.
fn zero_sum_exists(values: &[i64], len: usize) -> bool {
    fn go(values: &[i64], left: usize, acc: i128) -> bool {
        match values {
            [] => left == 0 && acc == 0,
            [last] => acc + *last as i128 * left as i128 == 0,
            [head, rest @ ..] => {
                (0..=left).any(|c| go(rest, left - c, acc + *head as i128 * c as i128))
            }
        }
    }
    go(values, len, 0)
}

/// Smallest odd `k <= len_max` such that some `k` members of `z`, repeats
/// allowed, sum to zero.
pub fn brute_zero_sum_min_odd(z: &[i64], len_max: usize) -> Option<usize> {
    if z.is_empty() {
        return None;
    }
    (1..=len_max).step_by(2).find(|&k| zero_sum_exists(z, k))
}

/// Compositions of `total` into `parts` positive integers, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=total - (parts - 1) {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Smallest `n <= n_max` for which some length-`n` multiset over `z`
/// using every member at least once is a tournament imbalance sequence.
pub fn brute_min_order(z: &ImbalanceSet, n_max: usize) -> Option<usize> {
    let members = z.members();
    (members.len()..=n_max).find(|&n| {
        compositions(n, members.len()).into_iter().any(|counts| {
            let entries: Vec<i64> = members
                .iter()
                .zip(&counts)
                .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
                .collect();
            let t = ImbalanceSequence::new(entries).expect("members are decreasing");
            check_tournament_imbalance(&t)
        })
    })
}
