//! Imbalance sets of tournaments.
//!
//! Given a finite set of integers `Z`, decide whether some tournament has
//! exactly `Z` as the set of its vertex imbalances (outdegree minus
//! indegree), and build such a tournament when it exists.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: dense oriented graphs with imbalance bookkeeping.
//! * [`sequences`]: score/imbalance sequence characterizations and the
//!   canonical sequence built from a candidate set.
//! * [`realize`]: maximum-arc realization of an imbalance sequence.
//! * [`equalsum`]: equal-sum sequence searches over two integer sets.
//! * [`tis`]: the full decision and construction pipeline.
//! * [`oracle`]: brute-force ground truth used to cross-check the above.

pub mod equalsum;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod realize;
pub mod sequences;
pub mod tis;

pub use equalsum::EqualSumWitness;
pub use error::{Error, Result};
pub use graph::Digraph;
pub use realize::RealizationReport;
pub use sequences::{ImbalanceSequence, ImbalanceSet, ScoreSequence};
pub use tis::{Refusal, TisDecision, TisOptions};
