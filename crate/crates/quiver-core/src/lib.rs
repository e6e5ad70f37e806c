//! Finite quivers stored as multiplicity matrices.
//!
//! Provides validation under the tame bounds, vertex degrees and regularity,
//! loop-free and reduced subquivers, signed adjacency matrices, brute-force
//! canonical forms, and a small subquiver matcher used by every structural
//! filter downstream.

mod canon;
mod error;
pub mod io;
mod pattern;
mod quiver;

pub use canon::{
    canonical, canonical_form, canonical_up_to_opposite, for_each_permutation, is_isomorphic,
    is_isomorphic_or_opposite, MAX_CANON_VERTICES,
};
pub use error::QuiverError;
pub use pattern::{
    contains_pattern, find_pattern, ArrowRule, PatternSpec, VertexRule, MAX_PATTERN_VERTICES,
};
pub use quiver::{Quiver, Regularity, VertexDegree, TAME_MAX_ARROWS, TAME_MAX_LOOPS};
