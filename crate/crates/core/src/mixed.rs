//! Mixed Beauville quadruples, the order-mod-4 obstruction and the
//! mixable-group test.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;
use serde_json::json;

use crate::beauville::{BeauvilleError, GroupContext, SCHEMA_VERSION};
use crate::groups::{CoxeterType, Element, RealizedGroup};
use crate::perms::{Permutation, SignedPermutation};
use crate::stabchain::{derived_subgroup, index2_characters, Character2, ClassTable, StabChain};

/// Every homomorphism of the group onto C₂, certified by its kernel.
pub fn characters(group: &RealizedGroup) -> Vec<Character2> {
    let linked = match group.ctype() {
        Some(t) if group.generators().len() == t.rank() => t.odd_links(),
        _ => Vec::new(),
    };
    index2_characters(group.degree(), group.perm_generators(), &linked)
}

/// One representative of each class of the group.
///
/// Types A, B and D use signed cycle types and work at any rank; other
/// groups need a class table within `bound`.
pub fn class_representatives(group: &RealizedGroup, bound: u64) -> Result<Vec<Element>, BeauvilleError> {
    if let (Some(t), Some(Element::Signed(_))) = (group.ctype(), group.generators().first()) {
        let (degree, signed, even) = match t {
            CoxeterType::A(n) => (n + 1, false, false),
            CoxeterType::B(n) => (n, true, false),
            CoxeterType::D(n) => (n, true, true),
            _ => unreachable!("signed realizations are A, B or D"),
        };
        let mut out = Vec::new();
        let mut parts = Vec::new();
        signed_partitions(degree, (degree, true), signed, &mut parts, &mut |p| {
            if even && p.iter().filter(|c| c.1).count() % 2 == 1 {
                return;
            }
            out.push(Element::Signed(representative(degree, p)));
        });
        return Ok(out);
    }
    let ctx = GroupContext::with_bound(group, bound);
    let table = ctx.require_table()?;
    table.classes().iter().map(|c| Ok(group.from_perm(table.element(c.representative))?)).collect()
}

/// Multisets of (cycle length, negative) summing to `n`, in non-increasing
/// order with `max` as the largest allowed part.
fn signed_partitions(
    n: usize,
    max: (usize, bool),
    signed: bool,
    acc: &mut Vec<(usize, bool)>,
    emit: &mut dyn FnMut(&[(usize, bool)]),
) {
    if n == 0 {
        emit(acc);
        return;
    }
    for len in (1..=max.0.min(n)).rev() {
        for neg in [true, false] {
            if (neg && !signed) || (len, neg) > max {
                continue;
            }
            acc.push((len, neg));
            signed_partitions(n - len, (len, neg), signed, acc, emit);
            acc.pop();
        }
    }
}

fn representative(degree: usize, parts: &[(usize, bool)]) -> SignedPermutation {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut signs = vec![false; degree];
    let mut at = 0;
    for &(len, neg) in parts {
        for i in 0..len {
            images[at + i] = at + (i + 1) % len;
        }
        signs[at] = neg;
        at += len;
    }
    SignedPermutation::new(Permutation::from_images(images).expect("cycles"), signs).expect("degree")
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase", tag = "result")]
pub enum Mod4 {
    /// An element outside the kernel whose order is not a multiple of 4.
    Blocked { witness: String, order: u64 },
    NotBlocked,
}

/// Looks for an element outside `ker χ` of order not divisible by 4: first
/// among the generators, then over class representatives (order and the
/// character are class functions).
pub fn order_mod4_obstruction(group: &RealizedGroup, chi: &Character2, bound: u64) -> Result<Mod4, BeauvilleError> {
    let blocked = |e: &Element| -> Result<Option<Mod4>, BeauvilleError> {
        let p = group.to_perm(e)?;
        let order = p.order();
        Ok((!chi.is_in_kernel(&p) && order % 4 != 0).then(|| Mod4::Blocked { witness: e.to_string(), order }))
    };
    for g in group.generators() {
        if let Some(b) = blocked(g)? {
            return Ok(b);
        }
    }
    for e in class_representatives(group, bound)? {
        if let Some(b) = blocked(&e)? {
            return Ok(b);
        }
    }
    Ok(Mod4::NotBlocked)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase", tag = "result")]
pub enum Mixable {
    /// Every element outside the derived subgroup has even order;
    /// `vacuous` when there are no such elements.
    Blocked { classes_outside: usize, vacuous: bool },
    /// An element outside the derived subgroup of odd order.
    NotBlocked { witness: String, order: u64 },
}

/// Condition (4) of mixability needs an odd-order element outside the
/// derived subgroup, since each generating pair has one member there.
pub fn mixable_obstruction(group: &RealizedGroup, bound: u64) -> Result<Mixable, BeauvilleError> {
    let derived = derived_subgroup(group.degree(), group.perm_generators());
    let mut outside = 0;
    for e in class_representatives(group, bound)? {
        let p = group.to_perm(&e)?;
        if derived.contains(&p) {
            continue;
        }
        outside += 1;
        if p.order() % 2 == 1 {
            return Ok(Mixable::NotBlocked { witness: e.to_string(), order: p.order() });
        }
    }
    Ok(Mixable::Blocked { classes_outside: outside, vacuous: outside == 0 })
}

/// ν(a, c) = o(a)·o(c)·o(ac).
pub fn nu(group: &RealizedGroup, a: &Element, c: &Element) -> Result<u64, BeauvilleError> {
    let o = |e: &Element| -> Result<u64, BeauvilleError> { Ok(group.to_perm(e)?.order()) };
    Ok(o(a)? * o(c)? * o(&a.mul(c)?)?)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MixableCheck {
    pub even_orders: bool,
    pub squares_generate: bool,
    pub second_generates: bool,
    pub coprime: bool,
    pub nu1: u64,
    pub nu2: u64,
}

impl MixableCheck {
    pub fn holds(&self) -> bool {
        self.even_orders && self.squares_generate && self.second_generates && self.coprime
    }
}

pub fn mixable_check(
    group: &RealizedGroup,
    a1: &Element,
    c1: &Element,
    a2: &Element,
    c2: &Element,
) -> Result<MixableCheck, BeauvilleError> {
    for e in [a1, c1, a2, c2] {
        if !group.contains(e) {
            return Err(BeauvilleError::NotInGroup(e.to_string()));
        }
    }
    let order = |e: &Element| -> Result<u64, BeauvilleError> { Ok(group.to_perm(e)?.order()) };
    let (nu1, nu2) = (nu(group, a1, c1)?, nu(group, a2, c2)?);
    Ok(MixableCheck {
        even_orders: order(a1)? % 2 == 0 && order(c1)? % 2 == 0,
        squares_generate: group.generates_whole(&[a1.pow(2), a1.mul(c1)?, c1.pow(2)])?,
        second_generates: group.generates_whole(&[a2.clone(), c2.clone()])?,
        coprime: nu1.gcd(&nu2) == 1,
        nu1,
        nu2,
    })
}

/// A candidate mixed structure `(ker χ; a, c; g)`.
#[derive(Clone, Debug)]
pub struct MixedQuadruple {
    pub character: Character2,
    pub a: Element,
    pub c: Element,
    pub g: Element,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MixedReport {
    pub kernel_order: String,
    pub generated_order: String,
    pub g_outside: bool,
    /// Some `γ` in the kernel with `(gγ)² ∈ Σ(a, c)`.
    pub square_witness: Option<String>,
    /// Classes of the kernel shared by `Σ(a, c)` and `Σ(aᵍ, cᵍ)`.
    pub shared_classes: Vec<usize>,
}

impl MixedReport {
    pub fn passes(&self) -> bool {
        self.generated_order == self.kernel_order
            && self.g_outside
            && self.square_witness.is_none()
            && self.shared_classes.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "schemaVersion": SCHEMA_VERSION, "passes": self.passes(), "report": self })
    }
}

/// Checks the four conditions of a mixed quadruple. Σ is taken in the
/// kernel `G⁰`, whose class table must fit in `bound`.
pub fn verify_mixed(group: &RealizedGroup, q: &MixedQuadruple, bound: u64) -> Result<MixedReport, BeauvilleError> {
    let kernel = &q.character.kernel;
    let kernel_order = kernel.order();
    if kernel_order > BigUint::from(bound) {
        return Err(BeauvilleError::Bound(format!("kernel of order {kernel_order} exceeds {bound}")));
    }
    let (pa, pc, pg) = (group.member_perm(&q.a)?, group.member_perm(&q.c)?, group.member_perm(&q.g)?);
    if !kernel.contains(&pa) || !kernel.contains(&pc) {
        return Err(BeauvilleError::Precondition("a and c must lie in the kernel".into()));
    }
    let degree = group.degree();
    let generated_order = StabChain::new(degree, &[pa.clone(), pc.clone()]).order();
    let g_outside = !kernel.contains(&pg);
    let table = ClassTable::new(kernel, &kernel.strong_generators(), bound)?;
    let sigma = table.sigma(&pa, &pc);
    let sigma_g = table.sigma(&pa.conjugate_by(&pg), &pc.conjugate_by(&pg));
    let mut square_witness = None;
    if g_outside {
        for gamma in table.elements() {
            let s = pg.compose(gamma).pow(2);
            let hit = s.is_identity() || table.class_of_element(&s).is_some_and(|c| sigma.contains(c));
            if hit {
                square_witness = Some(group.from_perm(gamma)?.to_string());
                break;
            }
        }
    }
    Ok(MixedReport {
        kernel_order: kernel_order.to_string(),
        generated_order: generated_order.to_string(),
        g_outside,
        square_witness,
        shared_classes: sigma.intersection(&sigma_g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_tables() {
        for t in [CoxeterType::A(4), CoxeterType::B(4), CoxeterType::D(4), CoxeterType::D(5)] {
            let g = RealizedGroup::build_coxeter(t).unwrap();
            let reps = class_representatives(&g, 1).unwrap();
            let ctx = GroupContext::new(&g);
            let table = ctx.table().unwrap();
            let mut seen: Vec<usize> = reps.iter().map(|e| table.class_of_element(&g.to_perm(e).unwrap()).unwrap()).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), reps.len(), "{t}");
            // D-type B-classes may split in two; all others are one class each.
            if !matches!(t, CoxeterType::D(_)) {
                assert_eq!(reps.len(), table.class_count(), "{t}");
            }
        }
    }
}
