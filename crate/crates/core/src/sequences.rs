//! Score and imbalance sequences, and imbalance sets.
//!
//! The checks here never sort their input. [`ImbalanceSequence`] is always
//! nonincreasing and [`ScoreSequence`] always nondecreasing; the
//! constructors reject anything else, so the prefix conditions below are
//! evaluated against the ordering they are stated for.
//!
//! For a nondecreasing score sequence the `j` smallest scores are the
//! prefix of length `j`, so checking Landau's inequality on prefixes is
//! equivalent to checking it on every index subset.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Integer sequence sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImbalanceSequence {
    entries: Vec<i64>,
}

impl ImbalanceSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Unsorted("nonincreasing"));
        }
        Ok(Self { entries })
    }

    /// Sort `entries` nonincreasing and wrap them.
    pub fn sorted_from(mut entries: Vec<i64>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.entries
    }
}

/// Non-negative integer sequence sorted nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScoreSequence {
    entries: Vec<i64>,
}

impl ScoreSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&s| s < 0) {
            return Err(Error::NegativeScore(i));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Unsorted("nondecreasing"));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The first condition a sequence fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceViolation {
    /// A tournament needs at least one vertex.
    Empty,
    /// `entries[index]` does not share the parity of `n - 1`.
    Parity { index: usize, value: i64 },
    /// The prefix inequality fails for the prefix of length `j` (1-based).
    Prefix { j: usize },
    /// All prefix inequalities hold but the total is wrong.
    Total,
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty sequence"),
            Self::Parity { index, value } => {
                write!(f, "entry {value} at index {index} has the wrong parity")
            }
            Self::Prefix { j } => write!(f, "prefix inequality fails at j = {j}"),
            Self::Total => write!(f, "total has the wrong value"),
        }
    }
}

/// Landau: every prefix sum of `s` is at least `C(j, 2)`, with equality at `j = n`.
pub fn landau_violation(s: &ScoreSequence) -> Option<SequenceViolation> {
    let mut prefix: i128 = 0;
    for (i, &v) in s.entries().iter().enumerate() {
        prefix += v as i128;
        let j = (i + 1) as i128;
        if prefix < j * (j - 1) / 2 {
            return Some(SequenceViolation::Prefix { j: i + 1 });
        }
    }
    let n = s.len() as i128;
    (prefix != n * (n - 1) / 2).then_some(SequenceViolation::Total)
}

pub fn check_landau(s: &ScoreSequence) -> bool {
    landau_violation(s).is_none()
}

fn prefix_violation(t: &ImbalanceSequence) -> Option<SequenceViolation> {
    let n = t.len() as i128;
    let mut prefix: i128 = 0;
    for (i, &v) in t.entries().iter().enumerate() {
        prefix += v as i128;
        let j = (i + 1) as i128;
        if prefix > j * (n - j) {
            return Some(SequenceViolation::Prefix { j: i + 1 });
        }
    }
    (prefix != 0).then_some(SequenceViolation::Total)
}

/// Imbalance sequences of simple digraphs: `sum_{i<=j} t_i <= j(n - j)`
/// for every `j`, with equality at `j = n`.
pub fn digraph_imbalance_violation(t: &ImbalanceSequence) -> Option<SequenceViolation> {
    prefix_violation(t)
}

pub fn check_digraph_imbalance(t: &ImbalanceSequence) -> bool {
    digraph_imbalance_violation(t).is_none()
}

/// Imbalance sequences of tournaments: the digraph conditions plus every
/// entry sharing the parity of `n - 1`.
pub fn tournament_imbalance_violation(t: &ImbalanceSequence) -> Option<SequenceViolation> {
    if t.is_empty() {
        return Some(SequenceViolation::Empty);
    }
    let reference = (t.len() as i64 - 1).rem_euclid(2);
    if let Some((index, &value)) = t
        .entries()
        .iter()
        .enumerate()
        .find(|(_, v)| v.rem_euclid(2) != reference)
    {
        return Some(SequenceViolation::Parity { index, value });
    }
    prefix_violation(t)
}

pub fn check_tournament_imbalance(t: &ImbalanceSequence) -> bool {
    tournament_imbalance_violation(t).is_none()
}

/// `s_i = (n - 1 + t_i) / 2`, listed nondecreasing.
pub fn scores_from_imbalances(t: &ImbalanceSequence) -> Result<ScoreSequence> {
    let n = t.len() as i64;
    match tournament_imbalance_violation(t) {
        None => {}
        Some(SequenceViolation::Parity { index, value }) => {
            return Err(Error::ParityMismatch {
                index,
                value,
                parity_ref: n - 1,
            })
        }
        Some(SequenceViolation::Prefix { j }) => return Err(Error::NotDigraphic(j)),
        Some(SequenceViolation::Total | SequenceViolation::Empty) => {
            return Err(Error::NotDigraphic(t.len()))
        }
    }
    let scores = t.entries().iter().rev().map(|&v| (n - 1 + v) / 2).collect();
    ScoreSequence::new(scores)
}

/// `t_i = 2 s_i - (n - 1)`, listed nonincreasing.
pub fn imbalances_from_scores(s: &ScoreSequence) -> Result<ImbalanceSequence> {
    if let Some(v) = landau_violation(s) {
        let j = match v {
            SequenceViolation::Prefix { j } => j,
            _ => s.len(),
        };
        return Err(Error::LandauViolation(j));
    }
    let n = s.len() as i64;
    let entries = s.entries().iter().rev().map(|&v| 2 * v - (n - 1)).collect();
    ImbalanceSequence::new(entries)
}

/// A finite set of integers split into its non-negative part `X`
/// (kept decreasing) and its negative part, stored as magnitudes `y`
/// (kept increasing, so `-y_1 > -y_2 > ...`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImbalanceSet {
    non_negative: Vec<i64>,
    negative_magnitudes: Vec<i64>,
}

impl ImbalanceSet {
    /// Build from a list of members, rejecting an empty list or repeats.
    pub fn new<I: IntoIterator<Item = i64>>(members: I) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for z in members {
            if z == i64::MIN {
                return Err(Error::Overflow("member magnitude"));
            }
            if !seen.insert(z) {
                return Err(Error::DuplicateMember(z));
            }
        }
        if seen.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Self::from_set(seen))
    }

    pub(crate) fn from_set(members: BTreeSet<i64>) -> Self {
        let non_negative = members.iter().rev().copied().filter(|&z| z >= 0).collect();
        let negative_magnitudes = members
            .iter()
            .rev()
            .filter(|&&z| z < 0)
            .map(|&z| -z)
            .collect();
        Self {
            non_negative,
            negative_magnitudes,
        }
    }

    /// All members in decreasing order.
    pub fn members(&self) -> Vec<i64> {
        self.non_negative
            .iter()
            .copied()
            .chain(self.negative_magnitudes.iter().map(|&y| -y))
            .collect()
    }

    /// `X`, decreasing.
    pub fn non_negative(&self) -> &[i64] {
        &self.non_negative
    }

    /// `{y : -y in Z}`, increasing.
    pub fn negative_magnitudes(&self) -> &[i64] {
        &self.negative_magnitudes
    }

    pub fn len(&self) -> usize {
        self.non_negative.len() + self.negative_magnitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, z: i64) -> bool {
        if z >= 0 {
            self.non_negative.contains(&z)
        } else {
            self.negative_magnitudes.contains(&-z)
        }
    }

    pub fn is_zero_only(&self) -> bool {
        self.non_negative == [0] && self.negative_magnitudes.is_empty()
    }

    pub fn has_both_signs(&self) -> bool {
        self.non_negative.iter().any(|&x| x > 0) && !self.negative_magnitudes.is_empty()
    }

    pub fn all_odd(&self) -> bool {
        self.members().iter().all(|z| z.rem_euclid(2) == 1)
    }

    pub fn all_even(&self) -> bool {
        self.members().iter().all(|z| z.rem_euclid(2) == 0)
    }

    /// `L`, the sum of the non-negative members.
    pub fn sum_non_negative(&self) -> u128 {
        self.non_negative.iter().map(|&x| x as u128).sum()
    }

    /// `M`, the sum of the negative members' magnitudes.
    pub fn sum_negative_magnitudes(&self) -> u128 {
        self.negative_magnitudes.iter().map(|&y| y as u128).sum()
    }

    /// `n = l*M + m*L`, the length of the canonical sequence.
    pub fn canonical_order(&self) -> Result<u128> {
        let l = self.non_negative.len() as u128;
        let m = self.negative_magnitudes.len() as u128;
        let a = l
            .checked_mul(self.sum_negative_magnitudes())
            .ok_or(Error::Overflow("l*M"))?;
        let b = m
            .checked_mul(self.sum_non_negative())
            .ok_or(Error::Overflow("m*L"))?;
        a.checked_add(b).ok_or(Error::Overflow("l*M + m*L"))
    }
}

impl fmt::Display for ImbalanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Each `x_i` repeated `M` times followed by each `-y_i` repeated `L` times.
///
/// Requires both parts of the set to be nonempty. The caller is responsible
/// for bounding [`ImbalanceSet::canonical_order`] before calling this, since
/// the result is materialized in full.
pub fn canonical_sequence(z: &ImbalanceSet) -> Result<ImbalanceSequence> {
    if z.non_negative().is_empty() || z.negative_magnitudes().is_empty() {
        return Err(Error::OneSided);
    }
    let n = usize::try_from(z.canonical_order()?).map_err(|_| Error::Overflow("n"))?;
    let big_l = usize::try_from(z.sum_non_negative()).map_err(|_| Error::Overflow("L"))?;
    let big_m = usize::try_from(z.sum_negative_magnitudes()).map_err(|_| Error::Overflow("M"))?;
    let mut entries = Vec::with_capacity(n);
    for &x in z.non_negative() {
        entries.extend(std::iter::repeat_n(x, big_m));
    }
    for &y in z.negative_magnitudes() {
        entries.extend(std::iter::repeat_n(-y, big_l));
    }
    ImbalanceSequence::new(entries)
}
