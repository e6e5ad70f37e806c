//! Skew-symmetric shadows: exact predicates, canonical forms under
//! relabeling and negation, and enumeration of the tame ones.

pub mod canon;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod predicates;
pub mod shadow;

pub use canon::{canonical_shadow, equivalent, is_canonical, MAX_CANON_SHADOW};
pub use catalog::{reference_shadow, reference_shadows, NamedShadow};
pub use enumerate::{enumerate, enumerate_with, EnumerateOptions, Mode};
pub use error::ShadowError;
pub use predicates::{
    is_essential, is_markov, is_tame_shadow, markov_shadow, ps3_decide, ps3_feasible, report,
    CartanWitness, Check, ShadowReport, Witness,
};
pub use shadow::{Shadow, MAX_ENTRY};
