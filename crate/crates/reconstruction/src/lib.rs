//! From essential shadows to candidate Gabriel quivers.
//!
//! Each reduced quiver is enlarged by admissible 2-cycles and loops, and
//! every candidate runs through structural rules, the dimension-vector
//! system, a search for wild trees in the covering, and a short table of
//! residual cases. [`classify`] collects the survivors for a vertex count
//! and [`verify_against_reference`] compares them with the bundled reference
//! lists.

mod candidate;
mod certificate;
mod classify;
mod dimension;
mod error;
mod filters;
mod golden;
mod placement;
mod table;
mod wild;

pub use candidate::CandidateQuiver;
pub use certificate::relation_free_certificate;
pub use classify::{
    candidates, check_main_theorem, classify, classify_with_threads, evaluate, reconstruct,
    survivors, verify_against_reference, verify_main_theorem, CandidateOutcome, Classification,
    MainTheoremReport, Mode, ShadowOutcome, VerificationReport,
};
pub use dimension::{dimension_obstruction, DimensionObstruction, DimensionSystem};
pub use error::ReconstructionError;
pub use filters::{
    check_rule, forbidden_square, structural_filters, ExclusionReport, Rule, Witness,
    STRUCTURAL_ORDER,
};
pub use golden::{golden_quivers, GoldenQuiver};
pub use placement::{
    loop_placements, two_cycle_placements, zero_shadow_quivers, MAX_PLACEMENT_VERTICES,
};
pub use table::{table_match, TableEntry, CASE_TABLE};
pub use wild::{
    classify_tree, wild_unfolding_filter, wild_unfolding_filter_with_cap, DiagramType, TreeEdge,
    UnfoldingTree, DEFAULT_TREE_CAP,
};
