use thiserror::Error;

/// Errors from shadow construction, parsing and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("shadow must have at least one vertex")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NonSquare { row: usize, len: usize, n: usize },
    #[error("matrix is not skew-symmetric at ({}, {})", .i + 1, .j + 1)]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("entry {value} is too large")]
    EntryTooLarge { value: i64 },
    #[error("invalid off-diagonal entry position ({}, {})", .i + 1, .j + 1)]
    BadEntry { i: usize, j: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}
