use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::context::GroupContext;
use super::dagger::DaggerCertificate;
use super::sigma::SigmaStrategy;
use super::{BeauvilleError, BeauvilleStructure, GeneratingPair, SCHEMA_VERSION};
use crate::groups::{Element, RealizedGroup};

#[derive(Clone, Debug, Serialize)]
pub struct Generation {
    pub order1: String,
    pub order2: String,
    pub expected: String,
}

impl Generation {
    pub fn holds(&self) -> bool {
        self.order1 == self.expected && self.order2 == self.expected
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Everything checked for one structure, with the evidence.
#[derive(Clone, Debug)]
pub struct BeauvilleReport {
    pub group: String,
    pub label: String,
    pub pairs: [[String; 2]; 2],
    pub witnesses: Option<[String; 2]>,
    pub generation: Generation,
    pub dagger: DaggerCertificate,
    pub strongly_real: Option<bool>,
    pub problems: Vec<String>,
    pub elapsed_ms: u128,
}

impl BeauvilleReport {
    pub fn verdict(&self) -> Verdict {
        if !self.problems.is_empty() || !self.generation.holds() || self.strongly_real == Some(false) {
            return Verdict::Fail;
        }
        if self.dagger.is_inconclusive() {
            return Verdict::Inconclusive;
        }
        if self.dagger.is_disjoint() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_beauville(&self) -> bool {
        self.problems.is_empty() && self.generation.holds() && self.dagger.is_disjoint()
    }

    /// Machine-readable form. `elapsedMs` is the only non-deterministic field.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "group": self.group,
            "label": self.label,
            "verdict": self.verdict(),
            "pairs": self.pairs,
            "witnesses": self.witnesses,
            "generation": self.generation,
            "dagger": self.dagger.to_json(),
            "stronglyReal": self.strongly_real,
            "problems": self.problems,
            "elapsedMs": self.elapsed_ms,
        })
    }
}

/// `t⁻¹xt = x⁻¹` and `t⁻¹yt = y⁻¹`.
pub fn inverts(t: &Element, pair: &GeneratingPair) -> Result<bool, BeauvilleError> {
    Ok(pair.x.conj(t)? == pair.x.inv() && pair.y.conj(t)? == pair.y.inv())
}

/// Checks the inner witnesses: `t₁` inverts the first pair and `t₂` the
/// second. Conjugation by `t₁` then serves as the common automorphism.
pub fn verify_strongly_real(group: &RealizedGroup, s: &BeauvilleStructure) -> Result<bool, BeauvilleError> {
    let (t1, t2) = s.witnesses.as_ref().ok_or_else(|| BeauvilleError::Precondition("no witnesses supplied".into()))?;
    for t in [t1, t2] {
        if !group.contains(t) {
            return Err(BeauvilleError::NotInGroup(format!("witness {t}")));
        }
    }
    Ok(inverts(t1, &s.pair1)? && inverts(t2, &s.pair2)?)
}

/// Scans a small group for an element inverting both members of `pair`.
pub fn find_inverter(ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<Option<Element>, BeauvilleError> {
    let table = ctx.require_table()?;
    let g = ctx.group();
    let px = g.to_perm(&pair.x)?;
    let py = g.to_perm(&pair.y)?;
    let (ix, iy) = (px.inverse(), py.inverse());
    for t in table.elements() {
        if px.conjugate_by(t) == ix && py.conjugate_by(t) == iy {
            return Ok(Some(g.from_perm(t)?));
        }
    }
    Ok(None)
}

/// Generation of both pairs, condition (†) under `strategy`, and the
/// strong-reality witnesses when present.
pub fn verify_unmixed(
    ctx: &GroupContext<'_>,
    s: &BeauvilleStructure,
    strategy: &dyn SigmaStrategy,
    label: &str,
) -> Result<BeauvilleReport, BeauvilleError> {
    let start = Instant::now();
    let g = ctx.group();
    let mut problems = Vec::new();
    let all = [&s.pair1.x, &s.pair1.y, &s.pair2.x, &s.pair2.y];
    for (name, e) in ["x1", "y1", "x2", "y2"].iter().zip(all) {
        if !g.contains(e) {
            problems.push(format!("{name} = {e} is not in {}", g.descriptor()));
        }
    }
    if !problems.is_empty() {
        return Err(BeauvilleError::NotInGroup(problems.join("; ")));
    }
    let order1 = g.subgroup_order(&[s.pair1.x.clone(), s.pair1.y.clone()])?;
    let order2 = g.subgroup_order(&[s.pair2.x.clone(), s.pair2.y.clone()])?;
    let generation = Generation {
        order1: order1.to_string(),
        order2: order2.to_string(),
        expected: g.expected_order().to_string(),
    };
    let f1 = strategy.fingerprint(ctx, &s.pair1)?;
    let f2 = strategy.fingerprint(ctx, &s.pair2)?;
    let dagger = strategy.check_dagger(ctx, &f1, &f2)?;
    let strongly_real = match &s.witnesses {
        Some(_) => Some(verify_strongly_real(g, s)?),
        None => None,
    };
    Ok(BeauvilleReport {
        group: g.descriptor().to_string(),
        label: label.to_string(),
        pairs: [
            [s.pair1.x.to_string(), s.pair1.y.to_string()],
            [s.pair2.x.to_string(), s.pair2.y.to_string()],
        ],
        witnesses: s.witnesses.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
        generation,
        dagger,
        strongly_real,
        problems,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
