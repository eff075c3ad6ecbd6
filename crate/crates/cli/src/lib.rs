//! Parsing and serialization shared by the `imbalance` binary and its tests.

pub mod format;
pub mod literal;

pub use format::{GraphFormat, RawGraph};
