use serde::Serialize;

use super::sigma::{SigmaKey, SigmaMode};
use crate::groups::Element;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "camelCase")]
pub enum Resolution {
    DiagonalRule,
    Distinct(String),
    Unresolved,
}

/// Two Σ elements sharing a key, and how the tie was settled.
#[derive(Clone, Debug, Serialize)]
pub struct Collision {
    pub key: String,
    pub left: String,
    pub right: String,
    pub resolution: Resolution,
}

impl Collision {
    pub fn new(key: &SigmaKey, u: &Element, v: &Element, resolution: Resolution) -> Self {
        Self { key: key.to_string(), left: u.to_string(), right: v.to_string(), resolution }
    }
}

#[derive(Clone, Debug)]
pub enum DaggerOutcome {
    DisjointCertified { mode: SigmaMode, keys: (usize, usize) },
    /// `u.conj(conjugator) == v`, both nontrivial.
    IntersectNontrivial { u: Element, v: Element, conjugator: Element },
    Inconclusive,
}

/// Verdict on condition (†) with its evidence.
#[derive(Clone, Debug)]
pub struct DaggerCertificate {
    pub outcome: DaggerOutcome,
    pub collisions: Vec<Collision>,
}

impl DaggerCertificate {
    pub fn disjoint(mode: SigmaMode, left: usize, right: usize, collisions: Vec<Collision>) -> Self {
        Self { outcome: DaggerOutcome::DisjointCertified { mode, keys: (left, right) }, collisions }
    }

    /// Panics unless the witness is genuine.
    pub fn intersect(u: Element, v: Element, conjugator: Element) -> Self {
        assert!(!u.is_identity(), "identity is never a witness");
        assert_eq!(u.conj(&conjugator).expect("same group"), v, "conjugator does not map u to v");
        Self { outcome: DaggerOutcome::IntersectNontrivial { u, v, conjugator }, collisions: Vec::new() }
    }

    pub fn is_disjoint(&self) -> bool {
        matches!(self.outcome, DaggerOutcome::DisjointCertified { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.outcome, DaggerOutcome::Inconclusive)
    }

    /// Collisions settled by the diagonal rule.
    pub fn diagonal_rule_count(&self) -> usize {
        self.collisions.iter().filter(|c| c.resolution == Resolution::DiagonalRule).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = match &self.outcome {
            DaggerOutcome::DisjointCertified { mode, keys } => serde_json::json!({
                "outcome": "disjointCertified",
                "mode": mode,
                "keys": [keys.0, keys.1],
            }),
            DaggerOutcome::IntersectNontrivial { u, v, conjugator } => serde_json::json!({
                "outcome": "intersectNontrivial",
                "u": u.to_string(),
                "v": v.to_string(),
                "conjugator": conjugator.to_string(),
            }),
            DaggerOutcome::Inconclusive => serde_json::json!({ "outcome": "inconclusive" }),
        };
        v["collisions"] = serde_json::to_value(&self.collisions).expect("serializable");
        v
    }
}
