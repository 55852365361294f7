//! Plain and signed permutations and the underline cycle notation.

pub mod notation;
mod perm;
mod signed;

pub use notation::{format_plain, format_signed, parse_plain, parse_signed};
pub use perm::Permutation;
pub use signed::{SignedCycle, SignedPermutation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle expression: {0}")]
    Malformed(String),
    #[error("point {point} outside 1..{degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated")]
    Duplicate(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}
