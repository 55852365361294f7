//! Direct products of two Coxeter groups: the abelianisation obstruction,
//! the coprime-order obstruction for dihedral factors, and assembly of a
//! product structure from structures on the factors.

use num_integer::Integer;

use super::context::GroupContext;
use super::sigma::default_sigma_strategy;
use super::verify::{verify_unmixed, BeauvilleReport, Verdict};
use super::{BeauvilleError, BeauvilleStructure, GeneratingPair};
use crate::groups::{CoxeterType, Element, RealizedGroup};

/// C₂-rank of the abelianisation of the product.
pub fn abelianisation_rank(types: &[CoxeterType]) -> usize {
    types.iter().map(|t| t.abelianisation_rank()).sum()
}

/// A 2-generated group has abelianisation of C₂-rank at most 2.
pub fn two_generated_obstruction(types: &[CoxeterType]) -> bool {
    abelianisation_rank(types) >= 3
}

/// `K × W(I₂(k))` with `gcd(k, |K|) = 1` is not a Beauville group: every
/// Σ then contains the rotations of the dihedral factor.
pub fn i2_order_obstruction(k1: &RealizedGroup, k: u64) -> bool {
    use num_bigint::BigUint;
    k1.expected_order().gcd(&BigUint::from(k)) == BigUint::from(1u32)
}

fn pair(a: &Element, b: &Element) -> Element {
    Element::Pair(Box::new(a.clone()), Box::new(b.clone()))
}

/// Product structure with its verification report.
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub structure: BeauvilleStructure,
    pub report: BeauvilleReport,
    /// Index of the recombination that verified; 0 is the plain pattern.
    pub attempt: usize,
}

struct Factor<'a> {
    pairs: [&'a GeneratingPair; 2],
    witnesses: Option<[&'a Element; 2]>,
}

fn factor(s: &BeauvilleStructure) -> Factor<'_> {
    Factor { pairs: [&s.pair1, &s.pair2], witnesses: s.witnesses.as_ref().map(|(a, b)| [a, b]) }
}

/// The second-factor components attached to one product pair: which pair
/// of `s2` they come from, whether its two elements swap places, and which
/// of them are inverted.
#[derive(Clone, Copy)]
struct Arm {
    source: usize,
    swap: bool,
    inv: [bool; 2],
}

impl Arm {
    fn components(self, f: &Factor<'_>) -> [Element; 2] {
        let p = f.pairs[self.source];
        let (a, b) = if self.swap { (&p.y, &p.x) } else { (&p.x, &p.y) };
        let pick = |e: &Element, i: bool| if i { e.inv() } else { e.clone() };
        [pick(a, self.inv[0]), pick(b, self.inv[1])]
    }
}

fn arms() -> Vec<Arm> {
    let mut out = Vec::new();
    for source in 0..2 {
        for swap in [true, false] {
            for inv in [[true, true], [false, false], [true, false], [false, true]] {
                out.push(Arm { source, swap, inv });
            }
        }
    }
    out
}

/// Builds a structure on `product = K₁ × K₂` from structures on the factors.
/// The first candidate is `((x₁,y₂′⁻¹),(y₁,x₂′⁻¹))`, `((x₂,y₁′⁻¹),(y₂,x₁′⁻¹))`
/// with witnesses `(t₁,t₂′)`, `(t₂,t₁′)`. If it does not verify, the other
/// recombinations of the factor components and their inverses are tried.
pub fn product_structure(
    product: &RealizedGroup,
    s1: &BeauvilleStructure,
    s2: &BeauvilleStructure,
) -> Result<ProductStructure, BeauvilleError> {
    let (f1, f2) = (factor(s1), factor(s2));
    let ctx = GroupContext::new(product);
    let strategy = default_sigma_strategy(&ctx);
    let all = arms();
    // The plain pattern pairs pair 1 with the swapped, inverted pair 2 of
    // the second factor and vice versa.
    let plain = (Arm { source: 1, swap: true, inv: [true, true] }, Arm { source: 0, swap: true, inv: [true, true] });
    let mut candidates = vec![plain];
    for &a in &all {
        for &b in all.iter().filter(|b| b.source != a.source) {
            candidates.push((a, b));
        }
    }
    for (attempt, (arm1, arm2)) in candidates.into_iter().enumerate() {
        let c1 = arm1.components(&f2);
        let c2 = arm2.components(&f2);
        let pair1 = GeneratingPair::new(pair(&f1.pairs[0].x, &c1[0]), pair(&f1.pairs[0].y, &c1[1]));
        let pair2 = GeneratingPair::new(pair(&f1.pairs[1].x, &c2[0]), pair(&f1.pairs[1].y, &c2[1]));
        if !product.generates_whole(&[pair1.x.clone(), pair1.y.clone()])?
            || !product.generates_whole(&[pair2.x.clone(), pair2.y.clone()])?
        {
            continue;
        }
        let witnesses = match (f1.witnesses, f2.witnesses) {
            (Some(w1), Some(w2)) => Some((pair(w1[0], w2[arm1.source]), pair(w1[1], w2[arm2.source]))),
            _ => None,
        };
        let structure = BeauvilleStructure { pair1, pair2, witnesses };
        let report = verify_unmixed(&ctx, &structure, strategy.as_ref(), "product")?;
        if report.verdict() == Verdict::Pass {
            return Ok(ProductStructure { structure, report, attempt });
        }
    }
    Err(BeauvilleError::Precondition(format!("no recombination gives a structure on {}", product.descriptor())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obstructions() {
        use CoxeterType::*;
        assert!(two_generated_obstruction(&[A(5), A(5), A(5)]));
        assert!(two_generated_obstruction(&[B(5), A(3)]));
        assert!(two_generated_obstruction(&[F4, E6]));
        assert!(two_generated_obstruction(&[I2(6), H3]));
        assert!(!two_generated_obstruction(&[I2(5), H3]));
        assert!(!two_generated_obstruction(&[A(5)]));
        let a2 = RealizedGroup::build_coxeter(A(2)).unwrap();
        assert!(i2_order_obstruction(&a2, 7));
        let a4 = RealizedGroup::build_coxeter(A(4)).unwrap();
        assert!(!i2_order_obstruction(&a4, 5));
    }
}
