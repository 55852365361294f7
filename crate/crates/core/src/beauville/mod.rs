//! Σ-sets, condition (†), verification of (strongly real) Beauville
//! structures, structure search and direct products.

mod context;
mod dagger;
pub mod product;
pub mod search;
pub mod sigma;
mod verify;

pub use context::{Conjugacy, GroupContext};
pub use dagger::{Collision, DaggerCertificate, DaggerOutcome, Resolution};
pub use sigma::{
    default_sigma_strategy, sigma_strategy, ExactSigma, InvariantSigma, TraceSigma, SigmaFingerprint, SigmaKey, SigmaMode, SigmaStrategy, SIGMA_STRATEGIES,
};
pub use verify::{find_inverter, inverts, verify_strongly_real, verify_unmixed, BeauvilleReport, Generation, Verdict};

use crate::groups::{Element, GroupError};
use crate::stabchain::StabError;

/// Version of every JSON document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum BeauvilleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Stab(#[from] StabError),
    #[error("not in group: {0}")]
    NotInGroup(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("fingerprint modes differ: {0}")]
    ModeMismatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingPair {
    pub x: Element,
    pub y: Element,
}

impl GeneratingPair {
    pub fn new(x: Element, y: Element) -> Self {
        Self { x, y }
    }
}

/// Two generating pairs with optional inner strong-reality witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeauvilleStructure {
    pub pair1: GeneratingPair,
    pub pair2: GeneratingPair,
    pub witnesses: Option<(Element, Element)>,
}
