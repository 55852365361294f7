//! Concrete realizations of the finite irreducible Coxeter groups.
//!
//! Aₙ, Bₙ and Dₙ are signed permutations, I₂(k) is an abstract dihedral
//! group, and the exceptional types are exact matrices acting on their root
//! systems. Every group carries a faithful permutation action so the
//! stabilizer chain machinery applies uniformly.

mod action;
mod coxeter_type;
mod element;
pub mod intertwiner;
mod realized;

pub use action::{FiniteAction, RootSystem, Vector};
pub use coxeter_type::CoxeterType;
pub use element::{Dihedral, Element};
pub use realized::{GroupDescriptor, RealizedGroup};

use crate::algebra::AlgebraError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),
    #[error("elements from different groups: {0}")]
    ParentMismatch(String),
    #[error("not in group: {0}")]
    NotInGroup(String),
    #[error("group order {found} differs from the expected {expected}")]
    OrderMismatch { expected: String, found: String },
    #[error("Coxeter relation fails: {0}")]
    Relation(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
