use thiserror::Error;

/// Errors raised while building, querying or parsing quivers.
///
/// Vertex indices are stored 0-based and displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quiver must have at least one vertex")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NonSquare { row: usize, len: usize, n: usize },
    #[error("negative multiplicity at ({}, {})", .i + 1, .j + 1)]
    NegativeEntry { i: usize, j: usize },
    #[error("multiplicity {mult} at ({}, {}) exceeds the tame bound", .i + 1, .j + 1)]
    TameBoundViolated { i: usize, j: usize, mult: u32 },
    #[error("multiplicity {mult} at ({}, {}) does not fit in storage", .i + 1, .j + 1)]
    MultiplicityOverflow { i: usize, j: usize, mult: i64 },
    #[error("vertex {} out of range for a quiver on {n} vertices", .v + 1)]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}
