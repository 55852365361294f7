use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rand::Rng;

use super::action::{FiniteAction, RootSystem};
use super::element::{Dihedral, Element};
use super::{CoxeterType, GroupError};
use crate::algebra::{ExactMatrix, ExactScalar};
use crate::perms::{Permutation, SignedPermutation};
use crate::stabchain::StabChain;

/// What a realized group is a model of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Coxeter(CoxeterType),
    Product(CoxeterType, CoxeterType),
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Coxeter(t) => write!(f, "{t}"),
            GroupDescriptor::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

/// A group given by generators in a concrete representation together with
/// a faithful action. The order is checked against the expected one when
/// the group is built.
#[derive(Debug)]
pub struct RealizedGroup {
    descriptor: GroupDescriptor,
    generators: Vec<Element>,
    perm_generators: Vec<Permutation>,
    action: FiniteAction,
    expected_order: BigUint,
    chain: OnceLock<StabChain>,
}

impl Clone for RealizedGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        Self {
            descriptor: self.descriptor,
            generators: self.generators.clone(),
            perm_generators: self.perm_generators.clone(),
            action: self.action.clone(),
            expected_order: self.expected_order.clone(),
            chain,
        }
    }
}

fn signed_swap(n: usize, i: usize, j: usize, negate: bool) -> SignedPermutation {
    let perm = Permutation::from_cycles(n, &[vec![i, j]]).expect("valid swap");
    let mut signs = vec![false; n];
    if negate {
        signs[i] = true;
        signs[j] = true;
    }
    SignedPermutation::new(perm, signs).expect("valid")
}

fn sign_flip(n: usize, i: usize) -> SignedPermutation {
    let mut signs = vec![false; n];
    signs[i] = true;
    SignedPermutation::new(Permutation::identity(n), signs).expect("valid")
}

/// Simple reflections in simple-root coordinates: `s_i(α_j) = α_j − a_ij α_i`.
fn cartan_reflections(cartan: &[Vec<i64>]) -> Vec<ExactMatrix> {
    let r = cartan.len();
    (0..r)
        .map(|i| {
            let rows = (0..r)
                .map(|row| {
                    (0..r)
                        .map(|col| {
                            let delta = i64::from(row == col);
                            ExactScalar::from_int(if row == i { delta - cartan[i][col] } else { delta })
                        })
                        .collect()
                })
                .collect();
            ExactMatrix::from_rows(rows).expect("square")
        })
        .collect()
}

/// Cartan matrix with `a_ii = 2` and `a_ij = −1` on simply laced edges.
fn simply_laced_cartan(t: CoxeterType) -> Vec<Vec<i64>> {
    let m = t.coxeter_matrix();
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| match (i == j, v) {
                    (true, _) => 2,
                    (false, 3) => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// The four H₄ simple reflections; H₃ uses the last three.
pub(crate) fn h4_reflections() -> Vec<ExactMatrix> {
    let perm = |a: usize, b: usize| SignedPermutation::from_perm(Permutation::from_cycles(4, &[vec![a, b]]).unwrap()).to_matrix();
    let q = |a: i64, b: i64| ExactScalar::from_parts(-a, -b, 4);
    let s4 = ExactMatrix::from_rows(vec![
        vec![q(1, 0), q(0, 1), q(0, 1), q(0, 1)],
        vec![q(0, 1), q(-3, 0), q(1, 0), q(1, 0)],
        vec![q(0, 1), q(1, 0), q(-3, 0), q(1, 0)],
        vec![q(0, 1), q(1, 0), q(1, 0), q(-3, 0)],
    ])
    .expect("square");
    vec![perm(2, 3), perm(1, 2), perm(0, 1), s4]
}

impl RealizedGroup {
    /// Builds the standard realization of `t` and checks its order.
    pub fn build_coxeter(t: CoxeterType) -> Result<Self, GroupError> {
        let t = t.validate()?;
        let (gens, action) = match t {
            CoxeterType::A(n) => {
                let gens = (0..n).map(|i| Element::Signed(signed_swap(n + 1, i, i + 1, false))).collect();
                (gens, FiniteAction::Natural(n + 1))
            }
            CoxeterType::B(n) => {
                let mut gens: Vec<Element> = (0..n - 1).map(|i| Element::Signed(signed_swap(n, i, i + 1, false))).collect();
                gens.push(Element::Signed(sign_flip(n, n - 1)));
                (gens, FiniteAction::SignedPoints(n))
            }
            CoxeterType::D(n) => {
                let mut gens: Vec<Element> = (0..n - 1).map(|i| Element::Signed(signed_swap(n, i, i + 1, false))).collect();
                gens.push(Element::Signed(signed_swap(n, n - 2, n - 1, true)));
                (gens, FiniteAction::SignedPoints(n))
            }
            CoxeterType::I2(k) => {
                let gens = vec![
                    Element::Dihedral(Dihedral { k, r: 0, flip: true }),
                    Element::Dihedral(Dihedral { k, r: 1, flip: true }),
                ];
                (gens, FiniteAction::Regular(k))
            }
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => Self::matrix_parts(cartan_reflections(&simply_laced_cartan(t)))?,
            CoxeterType::F4 => {
                let cartan = vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]];
                Self::matrix_parts(cartan_reflections(&cartan))?
            }
            CoxeterType::H4 => Self::matrix_parts(h4_reflections())?,
            CoxeterType::H3 => Self::matrix_parts(h4_reflections()[1..].to_vec())?,
        };
        Self::from_parts(GroupDescriptor::Coxeter(t), gens, action, t.order())
    }

    fn matrix_parts(mats: Vec<ExactMatrix>) -> Result<(Vec<Element>, FiniteAction), GroupError> {
        let roots = RootSystem::from_reflections(&mats)?;
        Ok((mats.into_iter().map(Element::Matrix).collect(), FiniteAction::Roots(roots)))
    }

    /// Assembles a group from explicit parts; fails if the generated group
    /// does not have `expected_order`.
    pub fn from_parts(
        descriptor: GroupDescriptor,
        generators: Vec<Element>,
        action: FiniteAction,
        expected_order: BigUint,
    ) -> Result<Self, GroupError> {
        let perm_generators = generators
            .iter()
            .map(|g| action.permutation_of(g))
            .collect::<Result<Vec<_>, _>>()?;
        let g = Self { descriptor, generators, perm_generators, action, expected_order, chain: OnceLock::new() };
        let found = g.chain().order();
        if found != g.expected_order {
            return Err(GroupError::OrderMismatch { expected: g.expected_order.to_string(), found: found.to_string() });
        }
        Ok(g)
    }

    /// A group given directly by permutations of `degree` points, for
    /// realizations that are isomorphic to, but not built from, a Coxeter
    /// presentation.
    pub fn permutation_group(
        descriptor: GroupDescriptor,
        degree: usize,
        generators: Vec<Permutation>,
        expected_order: BigUint,
    ) -> Result<Self, GroupError> {
        if let Some(p) = generators.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::Construction(format!("{p} has degree {} not {degree}", p.degree())));
        }
        Self::from_parts(descriptor, generators.into_iter().map(Element::Perm).collect(), FiniteAction::Natural(degree), expected_order)
    }

    /// `G × H` acting on the disjoint union of the two point sets.
    pub fn direct_product(g: &RealizedGroup, h: &RealizedGroup) -> Result<Self, GroupError> {
        let (eg, eh) = (g.identity(), h.identity());
        let mut gens: Vec<Element> =
            g.generators.iter().map(|x| Element::Pair(Box::new(x.clone()), Box::new(eh.clone()))).collect();
        gens.extend(h.generators.iter().map(|y| Element::Pair(Box::new(eg.clone()), Box::new(y.clone()))));
        let descriptor = match (g.descriptor, h.descriptor) {
            (GroupDescriptor::Coxeter(a), GroupDescriptor::Coxeter(b)) => GroupDescriptor::Product(a, b),
            _ => return Err(GroupError::Construction("only two irreducible factors are supported".into())),
        };
        let action = FiniteAction::Sum(Box::new(g.action.clone()), Box::new(h.action.clone()));
        Self::from_parts(descriptor, gens, action, &g.expected_order * &h.expected_order)
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    /// The Coxeter type, for an irreducible group.
    pub fn ctype(&self) -> Option<CoxeterType> {
        match self.descriptor {
            GroupDescriptor::Coxeter(t) => Some(t),
            GroupDescriptor::Product(..) => None,
        }
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn perm_generators(&self) -> &[Permutation] {
        &self.perm_generators
    }

    pub fn action(&self) -> &FiniteAction {
        &self.action
    }

    pub fn degree(&self) -> usize {
        self.action.degree()
    }

    pub fn expected_order(&self) -> &BigUint {
        &self.expected_order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.expected_order).ok()
    }

    /// Representation kind, for reports.
    pub fn representation(&self) -> &'static str {
        match self.generators.first() {
            Some(Element::Signed(_)) => "signed-perm",
            Some(Element::Matrix(_)) => "matrix",
            Some(Element::Dihedral(_)) => "dihedral",
            Some(Element::Perm(_)) => "perm",
            Some(Element::Pair(..)) => "product",
            None => "trivial",
        }
    }

    /// Stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree(), &self.perm_generators))
    }

    pub fn identity(&self) -> Element {
        self.generators[0].identity_like()
    }

    pub fn to_perm(&self, g: &Element) -> Result<Permutation, GroupError> {
        self.action.permutation_of(g)
    }

    pub fn from_perm(&self, p: &Permutation) -> Result<Element, GroupError> {
        self.action.element_of(p, &self.generators[0])
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.to_perm(g).is_ok_and(|p| self.chain().contains(&p))
    }

    /// Checks membership, returning the element's permutation image.
    pub fn member_perm(&self, g: &Element) -> Result<Permutation, GroupError> {
        let p = self.to_perm(g)?;
        if self.chain().contains(&p) {
            Ok(p)
        } else {
            Err(GroupError::NotInGroup(g.to_string()))
        }
    }

    /// Order of the subgroup generated by `elems`.
    pub fn subgroup_order(&self, elems: &[Element]) -> Result<BigUint, GroupError> {
        let perms = elems.iter().map(|e| self.to_perm(e)).collect::<Result<Vec<_>, _>>()?;
        Ok(StabChain::new(self.degree(), &perms).order())
    }

    pub fn generates_whole(&self, elems: &[Element]) -> Result<bool, GroupError> {
        Ok(self.subgroup_order(elems)? == self.expected_order)
    }

    /// Certifies that `m` lies in the group and returns it as an element.
    pub fn membership_matrix(&self, m: &ExactMatrix) -> Result<Element, GroupError> {
        let FiniteAction::Roots(roots) = &self.action else {
            let g = SignedPermutation::from_matrix(m)
                .map(Element::Signed)
                .ok_or_else(|| GroupError::NotInGroup("not a signed permutation matrix".into()))?;
            self.member_perm(&g)?;
            return Ok(g);
        };
        let p = roots.permutation_of(m)?;
        if !self.chain().contains(&p) {
            return Err(GroupError::NotInGroup("root permutation fails membership".into()));
        }
        Ok(Element::Matrix(m.clone()))
    }

    /// `(s_i s_j)^{m_ij} = e` with exact orders, for Coxeter groups.
    pub fn check_coxeter_relations(&self) -> Result<(), GroupError> {
        let Some(t) = self.ctype() else { return Ok(()) };
        let m = t.coxeter_matrix();
        for (i, si) in self.generators.iter().enumerate() {
            for (j, sj) in self.generators.iter().enumerate().skip(i) {
                let prod = si.mul(sj)?;
                let order = prod.order(1000);
                if order != Some(m[i][j]) {
                    return Err(GroupError::Relation(format!(
                        "(s{} s{}) has order {:?}, expected {}",
                        i + 1,
                        j + 1,
                        order,
                        m[i][j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every generator is recovered from its permutation image, so the
    /// action has trivial kernel.
    pub fn check_faithful(&self) -> Result<(), GroupError> {
        for (g, p) in self.generators.iter().zip(&self.perm_generators) {
            if self.from_perm(p)? != *g {
                return Err(GroupError::Construction(format!("action is not faithful at {g}")));
            }
        }
        Ok(())
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let p = self.chain().random_element(rng);
        self.from_perm(&p).expect("chain elements come from the group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn small_classical_orders() {
        for (t, order) in [
            (CoxeterType::A(4), 120u64),
            (CoxeterType::B(4), 384),
            (CoxeterType::D(4), 192),
            (CoxeterType::D(5), 1920),
            (CoxeterType::I2(7), 14),
        ] {
            let g = RealizedGroup::build_coxeter(t).unwrap();
            assert_eq!(g.chain().order_u64(), Some(order), "{t}");
            g.check_coxeter_relations().unwrap();
            g.check_faithful().unwrap();
        }
    }

    #[test]
    fn b3_signed_point_degree() {
        assert_eq!(RealizedGroup::build_coxeter(CoxeterType::B(3)).unwrap().degree(), 6);
    }

    #[test]
    fn exceptional_groups_and_root_counts() {
        for (t, roots) in [
            (CoxeterType::F4, 48),
            (CoxeterType::H3, 30),
            (CoxeterType::H4, 120),
            (CoxeterType::E6, 72),
        ] {
            let g = RealizedGroup::build_coxeter(t).unwrap();
            assert_eq!(g.degree(), roots, "{t}");
            g.check_coxeter_relations().unwrap();
            g.check_faithful().unwrap();
        }
    }

    #[test]
    fn h3_is_two_times_alt5() {
        let g = RealizedGroup::build_coxeter(CoxeterType::H3).unwrap();
        let z = Element::Matrix(ExactMatrix::scalar(4, ExactScalar::from_int(-1)));
        // −I is not in H₃ inside R⁴ (it negates the fixed direction); the
        // central element is −1 on the root span.
        assert!(!g.contains(&z));
        let derived = crate::stabchain::derived_subgroup(g.degree(), g.perm_generators());
        assert_eq!(derived.order_u64(), Some(60));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let central = (0..500)
            .map(|_| g.random_element(&mut rng))
            .find(|e| !e.is_identity() && g.generators().iter().all(|s| e.conj(s).unwrap() == *e));
        let c = central.expect("a central involution");
        assert_eq!(c.order(10), Some(2));
        assert!(!derived.contains(&g.to_perm(&c).unwrap()));
    }

    #[test]
    fn membership_of_identity_and_rejection() {
        let g = RealizedGroup::build_coxeter(CoxeterType::F4).unwrap();
        assert!(g.membership_matrix(&ExactMatrix::identity(4)).unwrap().is_identity());
        let bad = ExactMatrix::from_int_rows(&[&[1, 2, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        assert!(g.membership_matrix(&bad).is_err());
    }

    #[test]
    fn product_order() {
        let a = RealizedGroup::build_coxeter(CoxeterType::A(2)).unwrap();
        let b = RealizedGroup::build_coxeter(CoxeterType::I2(4)).unwrap();
        let p = RealizedGroup::direct_product(&a, &b).unwrap();
        assert_eq!(p.chain().order_u64(), Some(48));
        assert_eq!(p.descriptor().to_string(), "A2xI2(4)");
    }
}
