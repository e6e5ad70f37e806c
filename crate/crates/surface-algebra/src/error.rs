use quiver_core::QuiverError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("outlet label {0:?} is used only once")]
    DanglingOutlet(String),
    #[error("outlet label {0:?} is used {1} times")]
    OverGlued(String, usize),
    #[error("inner label {0:?} is used more than once")]
    DuplicateBullet(String),
    #[error("block {kind} expects {expected} labels, got {found}")]
    LabelCount {
        kind: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown block type {0:?}")]
    UnknownBlockType(String),
    #[error("no block pattern matches at vertex {}", .0 + 1)]
    NoMatchingPattern(usize),
    #[error("vertex {} carries a loop", .0 + 1)]
    LoopAtPivot(usize),
    #[error("weights differ along the g-orbit of arrow {0}")]
    WeightNotOrbitConstant(usize),
    #[error("arrow {0} has weight times orbit length below 2")]
    WeightTooSmall(usize),
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
