use std::path::PathBuf;

use quiver_core::QuiverError;
use reconstruction::ReconstructionError;
use shadow_engine::ShadowError;
use surface_algebra::SurfaceError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Domain(String),
    #[error("output does not match the reference lists")]
    Mismatch,
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Input { .. } => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ShadowError> for CliError {
    fn from(e: ShadowError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ReconstructionError> for CliError {
    fn from(e: ReconstructionError) -> Self {
        CliError::Domain(e.to_string())
    }
}
