//! Permutation-group engine: Schreier–Sims, orbits and blocks, the short
//! cycle criterion for containing the alternating group, derived and index-2
//! subgroups, and conjugacy classes of small groups.

mod chain;
pub mod classes;
mod jones;
pub mod orbits;
mod subgroups;

pub use chain::StabChain;
pub use classes::{conjugacy_class, ClassSet, ClassTable, DEFAULT_BOUND};
pub use jones::{jones_certificate, JonesEvidence, JonesVerdict};
pub use orbits::{is_primitive, is_transitive};
pub use subgroups::{commutator, derived_subgroup, index2_characters, normal_closure, Character2};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum StabError {
    #[error("{what} exceeds bound {bound}")]
    BoundExceeded { what: &'static str, bound: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
}
