use thiserror::Error;

/// Errors raised by the graph, sequence and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertices {0} and {1} are already joined")]
    PairAlreadyJoined(usize, usize),

    #[error("digraph is not a tournament")]
    NotATournament,

    #[error("digraph is not a near tournament")]
    NotANearTournament,

    #[error("sequence is not sorted {0}")]
    Unsorted(&'static str),

    #[error("score sequence contains a negative entry at index {0}")]
    NegativeScore(usize),

    #[error("imbalance {value} at index {index} does not have the parity of n - 1 = {parity_ref}")]
    ParityMismatch {
        index: usize,
        value: i64,
        parity_ref: i64,
    },

    #[error("score sequence violates Landau's condition at prefix {0}")]
    LandauViolation(usize),

    #[error("sequence is not the imbalance sequence of a simple digraph (prefix {0})")]
    NotDigraphic(usize),

    #[error("empty set")]
    EmptySet,

    #[error("duplicate member {0}")]
    DuplicateMember(i64),

    #[error("set must contain a non-negative and a negative member")]
    OneSided,

    #[error("{0} must contain only even values")]
    OddEntry(&'static str),

    #[error("{0} must contain only non-negative values")]
    NegativeEntry(&'static str),

    #[error("{0} must contain only positive values")]
    NonPositiveEntry(&'static str),

    #[error("repetition bound k must be at least 1")]
    ZeroRepetition,

    #[error("invalid equal-sum witness: {0}")]
    InvalidWitness(&'static str),

    #[error("set is not the imbalance set of a tournament: {0}")]
    NotRealizable(crate::tis::Refusal),

    #[error("required order {required} exceeds the configured cap {cap}")]
    ResourceCap { required: u128, cap: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("realization failed: {0}")]
    RealizationFailed(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("order {order} is outside the enumeration budget (1..={max})")]
    OutsideBudget { order: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
