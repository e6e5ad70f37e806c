//! Blocks of generalized triangulation quivers.
//!
//! Glueing and exact-cover decomposition over the block catalog, the
//! permutations `f` and `g` with virtual arrows for triangulation quivers,
//! and the block rewrites induced by mutation.

mod blocks;
mod decompose;
mod error;
mod glue;
mod mutate;
mod triangulation;

pub use blocks::{BlockDecomposition, BlockInstance, BlockTemplate, BlockType, Role};
pub use decompose::{all_decompositions, decompose_into_blocks, recognize_gwsa_gabriel};
pub use error::SurfaceError;
pub use glue::{decomposition_to_json, glue_blocks, parse_glue_spec, BlockSpec, GlueSpec, Glued};
pub use mutate::{mutate_block, mutate_block_with_rule, RewriteRule};
pub use triangulation::{triangulation_structure, TriangulationStructure};
