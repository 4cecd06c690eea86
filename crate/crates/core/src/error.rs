use thiserror::Error;

/// Errors raised by the algebra, lattice, and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} outside supported range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("not a permutation of 1..={degree}: {images:?}")]
    NotAPermutation { degree: usize, images: Vec<usize> },

    #[error("invalid shuffle: {0}")]
    InvalidShuffle(String),

    #[error("repeated index {0} in bracket")]
    RepeatedIndex(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot infer degree from empty input")]
    EmptyInput,

    #[error("unsupported search parameters: {0}")]
    UnsupportedSearch(String),

    #[error("internal error: deciders disagree ({0})")]
    DeciderDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
