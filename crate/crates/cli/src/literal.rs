//! Comma-separated integer literals: `"4, 2,-2"`.

use std::collections::BTreeSet;

use imbalance_core::ImbalanceSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiteralError {
    #[error("empty literal")]
    Empty,
    #[error("`{0}` is not an integer")]
    NotAnInteger(String),
    #[error("{0} appears more than once; a set lists each member once")]
    Duplicate(i64),
    #[error(transparent)]
    Core(#[from] imbalance_core::Error),
}

/// Integers separated by commas, whitespace allowed around each one.
/// The empty (or all-blank) literal is the empty sequence.
pub fn parse_sequence(literal: &str) -> Result<Vec<i64>, LiteralError> {
    if literal.trim().is_empty() {
        return Ok(Vec::new());
    }
    literal
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| LiteralError::NotAnInteger(tok.to_string()))
        })
        .collect()
}

/// A sequence literal with no repeated members.
pub fn parse_members(literal: &str) -> Result<Vec<i64>, LiteralError> {
    let values = parse_sequence(literal)?;
    if values.is_empty() {
        return Err(LiteralError::Empty);
    }
    let mut seen = BTreeSet::new();
    for &v in &values {
        if !seen.insert(v) {
            return Err(LiteralError::Duplicate(v));
        }
    }
    Ok(values)
}

pub fn parse_set(literal: &str) -> Result<ImbalanceSet, LiteralError> {
    Ok(ImbalanceSet::new(parse_members(literal)?)?)
}

/// `4,2,-2`
pub fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
