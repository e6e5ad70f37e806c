use quiver_core::QuiverError;
use shadow_engine::ShadowError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructionError {
    #[error("shadow is not essential")]
    NotEssential,
    #[error("{0} vertices is outside the supported range")]
    UnsupportedSize(usize),
    #[error("arrow {} is not composable with its predecessor in the path", .0 + 1)]
    NotComposable(usize),
    #[error("path must have length 2 or 3, got {0}")]
    PathLength(usize),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Shadow(#[from] ShadowError),
}
