use thiserror::Error;

/// Errors raised by constructions, recognisers and file parsers.
///
/// Negative answers ("this is not a difference set", "not strongly
/// regular") are not errors; they come back as `None` or as a verdict.
/// An `Error` means the input violated a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("order {0} exceeds the desk-scale cap of 2^20")]
    OrderTooLarge(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("point {point} out of range for {v} points")]
    PointOutOfRange { point: usize, v: usize },
    #[error("block {0:?} repeats a point")]
    RepeatedPoint(Vec<usize>),
    #[error("empty block")]
    EmptyBlock,
    #[error("duplicate block {0:?} in a simple structure")]
    DuplicateBlock(Vec<usize>),
    #[error("point counts differ ({0} vs {1})")]
    PointCountMismatch(usize, usize),
    #[error("classification needs at least one block")]
    NoBlocks,
    #[error("subset size t={t} is invalid for block size k={k}")]
    BadSubsetSize { t: usize, k: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("element {0:?} is not in the group")]
    NotInGroup(Vec<u32>),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
