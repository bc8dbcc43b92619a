use thiserror::Error;

/// Errors produced by the braid, matrix and invariant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid token `{0}`: expected a nonzero integer")]
    InvalidToken(String),
    #[error("zero is not a generator")]
    ZeroToken,
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("permutation order exceeds the limit of {limit}")]
    OrderLimitExceeded { limit: u64 },
    #[error("{0} is not a permutation of 1..n")]
    InvalidPermutation(String),
    #[error("move {kind} does not apply at position {pos}")]
    MoveMismatch { kind: &'static str, pos: usize },
    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix must be square and non-empty")]
    NotSquare,
    #[error("diagonal entry ({0}, {0}) is nonzero")]
    NonzeroDiagonal(usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("oracle cost guard exceeded: {0}")]
    OracleGuard(String),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
