use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::context::{Conjugacy, GroupContext};
use super::dagger::{Collision, DaggerCertificate, DaggerOutcome, Resolution};
use super::{BeauvilleError, GeneratingPair};
use crate::groups::Element;
use crate::perms::SignedCycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaMode {
    Exact,
    Invariant,
    Trace,
}

impl fmt::Display for SigmaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaMode::Exact => "exact",
            SigmaMode::Invariant => "invariant",
            SigmaMode::Trace => "trace",
        })
    }
}

/// A conjugacy-invariant label for one element of Σ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SigmaKey {
    /// Index into the group's class table.
    Class { index: usize },
    Signed { order: u64, cycle_type: Vec<SignedCycle> },
    Matrix { order: u64, char_poly: Vec<String>, root_cycle_type: Vec<usize> },
    Trace { trace: String },
}

impl fmt::Display for SigmaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaKey::Class { index } => write!(f, "class {index}"),
            SigmaKey::Signed { order, cycle_type } => {
                let ct: Vec<String> =
                    cycle_type.iter().map(|c| format!("{}{}", c.len, if c.negative { "-" } else { "+" })).collect();
                write!(f, "order {order}, cycles [{}]", ct.join(" "))
            }
            SigmaKey::Matrix { order, char_poly, root_cycle_type } => {
                write!(f, "order {order}, charpoly [{}], root cycles {:?}", char_poly.join(", "), root_cycle_type)
            }
            SigmaKey::Trace { trace } => write!(f, "trace {trace}"),
        }
    }
}

/// Σ(x, y) described by keys, each with the distinct representatives
/// (up to conjugacy where this is decidable) of the powers carrying it.
#[derive(Clone, Debug)]
pub struct SigmaFingerprint {
    pub mode: SigmaMode,
    pub entries: BTreeMap<SigmaKey, Vec<Element>>,
}

impl SigmaFingerprint {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &SigmaKey> {
        self.entries.keys()
    }
}

/// Nontrivial powers `g, g², …, g^{o−1}`.
pub fn nontrivial_powers(ctx: &GroupContext<'_>, g: &Element) -> Result<Vec<Element>, BeauvilleError> {
    let order = ctx.group().to_perm(g)?.order();
    let mut out = Vec::with_capacity(order.saturating_sub(1) as usize);
    let mut p = g.clone();
    for _ in 1..order {
        out.push(p.clone());
        p = p.mul(g)?;
    }
    Ok(out)
}

/// The three seeds `x`, `y`, `xy` with all their nontrivial powers.
pub fn sigma_seeds(ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<Vec<Element>, BeauvilleError> {
    let xy = pair.x.mul(&pair.y)?;
    let mut out = nontrivial_powers(ctx, &pair.x)?;
    out.extend(nontrivial_powers(ctx, &pair.y)?);
    out.extend(nontrivial_powers(ctx, &xy)?);
    Ok(out)
}

/// One way of fingerprinting Σ and deciding condition (†).
pub trait SigmaStrategy: Send + Sync {
    fn mode(&self) -> SigmaMode;

    fn fingerprint(&self, ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<SigmaFingerprint, BeauvilleError>;

    fn check_dagger(
        &self,
        ctx: &GroupContext<'_>,
        a: &SigmaFingerprint,
        b: &SigmaFingerprint,
    ) -> Result<DaggerCertificate, BeauvilleError>;
}

fn mode_check(mode: SigmaMode, a: &SigmaFingerprint, b: &SigmaFingerprint) -> Result<(), BeauvilleError> {
    if a.mode != mode || b.mode != mode {
        return Err(BeauvilleError::ModeMismatch(format!("{} and {} under {}", a.mode, b.mode, mode)));
    }
    Ok(())
}

fn push_distinct(ctx: &GroupContext<'_>, reps: &mut Vec<Element>, e: Element, by_conjugacy: bool) {
    if reps.contains(&e) {
        return;
    }
    if by_conjugacy && reps.iter().any(|r| matches!(ctx.conjugacy(r, &e), Conjugacy::Conjugate(_))) {
        return;
    }
    reps.push(e);
}

/// Literal class sets from the class table.
pub struct ExactSigma;

impl SigmaStrategy for ExactSigma {
    fn mode(&self) -> SigmaMode {
        SigmaMode::Exact
    }

    fn fingerprint(&self, ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<SigmaFingerprint, BeauvilleError> {
        let table = ctx.require_table()?;
        let mut entries: BTreeMap<SigmaKey, Vec<Element>> = BTreeMap::new();
        for p in sigma_seeds(ctx, pair)? {
            let perm = ctx.group().to_perm(&p)?;
            let index = table.class_of_element(&perm).ok_or_else(|| BeauvilleError::NotInGroup(p.to_string()))?;
            entries.entry(SigmaKey::Class { index }).or_insert_with(|| vec![p]);
        }
        Ok(SigmaFingerprint { mode: SigmaMode::Exact, entries })
    }

    fn check_dagger(
        &self,
        ctx: &GroupContext<'_>,
        a: &SigmaFingerprint,
        b: &SigmaFingerprint,
    ) -> Result<DaggerCertificate, BeauvilleError> {
        mode_check(SigmaMode::Exact, a, b)?;
        for (key, reps) in &a.entries {
            if let Some(other) = b.entries.get(key) {
                return Ok(intersect(ctx, key, &reps[0], &other[0]));
            }
        }
        Ok(DaggerCertificate::disjoint(SigmaMode::Exact, a.len(), b.len(), Vec::new()))
    }
}

fn intersect(ctx: &GroupContext<'_>, key: &SigmaKey, u: &Element, v: &Element) -> DaggerCertificate {
    match ctx.conjugacy(u, v) {
        Conjugacy::Conjugate(c) => DaggerCertificate::intersect(u.clone(), v.clone(), c),
        _ => DaggerCertificate {
            outcome: DaggerOutcome::Inconclusive,
            collisions: vec![Collision::new(key, u, v, Resolution::Unresolved)],
        },
    }
}

/// Conjugacy invariants: signed cycle type for monomial groups,
/// characteristic polynomial and root cycle type for matrix groups, and
/// class indices for everything else.
pub struct InvariantSigma;

impl InvariantSigma {
    fn key(ctx: &GroupContext<'_>, e: &Element) -> Result<SigmaKey, BeauvilleError> {
        match e {
            Element::Signed(p) => Ok(SigmaKey::Signed { order: p.order(), cycle_type: p.cycle_type() }),
            Element::Matrix(m) => {
                let perm = ctx.group().to_perm(e)?;
                Ok(SigmaKey::Matrix {
                    order: perm.order(),
                    char_poly: m.char_poly().iter().map(ToString::to_string).collect(),
                    root_cycle_type: perm.cycle_type(),
                })
            }
            _ => {
                let table = ctx.require_table()?;
                let perm = ctx.group().to_perm(e)?;
                let index = table.class_of_element(&perm).ok_or_else(|| BeauvilleError::NotInGroup(e.to_string()))?;
                Ok(SigmaKey::Class { index })
            }
        }
    }
}

impl SigmaStrategy for InvariantSigma {
    fn mode(&self) -> SigmaMode {
        SigmaMode::Invariant
    }

    fn fingerprint(&self, ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<SigmaFingerprint, BeauvilleError> {
        let mut entries: BTreeMap<SigmaKey, Vec<Element>> = BTreeMap::new();
        let mut seen = std::collections::HashSet::new();
        for p in sigma_seeds(ctx, pair)? {
            if !seen.insert(p.clone()) {
                continue;
            }
            let key = Self::key(ctx, &p)?;
            // Keys that are complete class invariants need one
            // representative; others keep one per class found.
            let complete = matches!(key, SigmaKey::Class { .. })
                || (matches!(key, SigmaKey::Signed { .. })
                    && !matches!(ctx.group().ctype(), Some(crate::groups::CoxeterType::D(_))));
            let reps = entries.entry(key).or_default();
            if complete && !reps.is_empty() {
                continue;
            }
            let decidable = matches!(p, Element::Signed(_)) || ctx.table().is_some();
            push_distinct(ctx, reps, p, decidable);
        }
        Ok(SigmaFingerprint { mode: SigmaMode::Invariant, entries })
    }

    fn check_dagger(
        &self,
        ctx: &GroupContext<'_>,
        a: &SigmaFingerprint,
        b: &SigmaFingerprint,
    ) -> Result<DaggerCertificate, BeauvilleError> {
        mode_check(SigmaMode::Invariant, a, b)?;
        let mut resolved = Vec::new();
        let mut unresolved = Vec::new();
        for (key, left) in &a.entries {
            let Some(right) = b.entries.get(key) else { continue };
            for u in left {
                for v in right {
                    match ctx.conjugacy(u, v) {
                        Conjugacy::Conjugate(c) => return Ok(DaggerCertificate::intersect(u.clone(), v.clone(), c)),
                        Conjugacy::Distinct(why) => {
                            resolved.push(Collision::new(key, u, v, Resolution::Distinct(why.to_string())))
                        }
                        Conjugacy::Unknown => unresolved.push(Collision::new(key, u, v, Resolution::Unresolved)),
                    }
                }
            }
        }
        if !unresolved.is_empty() {
            unresolved.extend(resolved);
            return Ok(DaggerCertificate { outcome: DaggerOutcome::Inconclusive, collisions: unresolved });
        }
        Ok(DaggerCertificate::disjoint(SigmaMode::Invariant, a.len(), b.len(), resolved))
    }
}

/// Traces of powers only, with the rule that a diagonal monomial or matrix
/// element is never conjugate to a non-diagonal one. Any other coincidence
/// is reported as inconclusive.
pub struct TraceSigma;

impl SigmaStrategy for TraceSigma {
    fn mode(&self) -> SigmaMode {
        SigmaMode::Trace
    }

    fn fingerprint(&self, ctx: &GroupContext<'_>, pair: &GeneratingPair) -> Result<SigmaFingerprint, BeauvilleError> {
        let mut entries: BTreeMap<SigmaKey, Vec<Element>> = BTreeMap::new();
        for p in sigma_seeds(ctx, pair)? {
            let trace = p
                .trace()
                .ok_or_else(|| BeauvilleError::Unsupported("traces need a matrix or monomial representation".into()))?;
            let reps = entries.entry(SigmaKey::Trace { trace: trace.to_string() }).or_default();
            let diag = p.is_diagonal();
            // One representative per diagonality is all the rule can use.
            if !reps.iter().any(|r| r.is_diagonal() == diag) {
                reps.push(p);
            }
        }
        Ok(SigmaFingerprint { mode: SigmaMode::Trace, entries })
    }

    fn check_dagger(
        &self,
        _ctx: &GroupContext<'_>,
        a: &SigmaFingerprint,
        b: &SigmaFingerprint,
    ) -> Result<DaggerCertificate, BeauvilleError> {
        mode_check(SigmaMode::Trace, a, b)?;
        let mut resolved = Vec::new();
        let mut unresolved = Vec::new();
        for (key, left) in &a.entries {
            let Some(right) = b.entries.get(key) else { continue };
            for u in left {
                for v in right {
                    if u.is_diagonal() != v.is_diagonal() {
                        resolved.push(Collision::new(key, u, v, Resolution::DiagonalRule));
                    } else {
                        unresolved.push(Collision::new(key, u, v, Resolution::Unresolved));
                    }
                }
            }
        }
        if !unresolved.is_empty() {
            unresolved.extend(resolved);
            return Ok(DaggerCertificate { outcome: DaggerOutcome::Inconclusive, collisions: unresolved });
        }
        Ok(DaggerCertificate::disjoint(SigmaMode::Trace, a.len(), b.len(), resolved))
    }
}

pub const SIGMA_STRATEGIES: &[&str] = &["exact", "invariant", "trace"];

pub fn sigma_strategy(name: &str) -> Option<Box<dyn SigmaStrategy>> {
    match name {
        "exact" => Some(Box::new(ExactSigma)),
        "invariant" => Some(Box::new(InvariantSigma)),
        "trace" => Some(Box::new(TraceSigma)),
        _ => None,
    }
}

/// Exact when the class table fits, invariant otherwise.
pub fn default_sigma_strategy(ctx: &GroupContext<'_>) -> Box<dyn SigmaStrategy> {
    if ctx.is_small() {
        Box::new(ExactSigma)
    } else {
        Box::new(InvariantSigma)
    }
}
