use std::collections::HashMap;
use std::sync::OnceLock;

use super::BeauvilleError;
use crate::groups::{CoxeterType, Element, RealizedGroup};
use crate::perms::{Permutation, SignedPermutation};
use crate::stabchain::{ClassTable, DEFAULT_BOUND};

/// Memory cap for class-orbit searches, in elements.
const ORBIT_CAP: u64 = 200_000;

/// Result of a conjugacy test.
#[derive(Clone, Debug)]
pub enum Conjugacy {
    /// `u.conj(c) == v`.
    Conjugate(Element),
    /// Certified non-conjugate, with the reason.
    Distinct(&'static str),
    /// The test ran out of budget.
    Unknown,
}

/// Per-group data shared by the Σ strategies: the group itself, an optional
/// class table for small groups, and the budget for orbit enumerations.
pub struct GroupContext<'g> {
    group: &'g RealizedGroup,
    bound: u64,
    table: OnceLock<Option<ClassTable>>,
}

impl<'g> GroupContext<'g> {
    pub fn new(group: &'g RealizedGroup) -> Self {
        Self::with_bound(group, DEFAULT_BOUND)
    }

    pub fn with_bound(group: &'g RealizedGroup, bound: u64) -> Self {
        Self { group, bound, table: OnceLock::new() }
    }

    pub fn group(&self) -> &'g RealizedGroup {
        self.group
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Whether the whole group fits under the bound.
    pub fn is_small(&self) -> bool {
        self.group.order_u64().is_some_and(|o| o <= self.bound)
    }

    /// Class table, built on first use when the group is small.
    pub fn table(&self) -> Option<&ClassTable> {
        self.table
            .get_or_init(|| {
                if !self.is_small() {
                    return None;
                }
                ClassTable::new(self.group.chain(), self.group.perm_generators(), self.bound).ok()
            })
            .as_ref()
    }

    pub fn require_table(&self) -> Result<&ClassTable, BeauvilleError> {
        self.table().ok_or_else(|| {
            BeauvilleError::Bound(format!(
                "{} has order {} > {}; use the invariant mode",
                self.group.descriptor(),
                self.group.expected_order(),
                self.bound
            ))
        })
    }

    fn is_d_type(&self) -> bool {
        matches!(self.group.ctype(), Some(CoxeterType::D(_)))
    }

    /// Decides whether `u` and `v` are conjugate in the group, returning a
    /// checked conjugator when they are.
    pub fn conjugacy(&self, u: &Element, v: &Element) -> Conjugacy {
        if let (Some(a), Some(b)) = (u.as_signed(), v.as_signed()) {
            if let Some(r) = self.signed_conjugacy(a, b) {
                return r;
            }
        }
        if let Some(t) = self.table() {
            let (Ok(pu), Ok(pv)) = (self.group.to_perm(u), self.group.to_perm(v)) else {
                return Conjugacy::Distinct("not both in the group");
            };
            if t.class_of_element(&pu) != t.class_of_element(&pv) {
                return Conjugacy::Distinct("different classes");
            }
        }
        self.orbit_conjugacy(u, v)
    }

    /// Signed cycle type decides conjugacy in W(Bₙ) and Sym(n); W(Dₙ)
    /// additionally needs a conjugator with an even number of sign changes.
    fn signed_conjugacy(&self, u: &SignedPermutation, v: &SignedPermutation) -> Option<Conjugacy> {
        match self.group.ctype() {
            Some(CoxeterType::A(_) | CoxeterType::B(_) | CoxeterType::D(_)) => {}
            _ => return None,
        }
        if u.cycle_type() != v.cycle_type() {
            return Some(Conjugacy::Distinct("signed cycle types differ"));
        }
        let mut c = u.conjugator_to(v).expect("equal signed cycle types");
        if matches!(self.group.ctype(), Some(CoxeterType::A(_))) {
            c = SignedPermutation::from_perm(c.perm().clone());
        }
        if self.is_d_type() && !c.is_even_signed() {
            match odd_centralizer_element(u) {
                Some(z) => c = z.compose(&c),
                None => return Some(Conjugacy::Distinct("split class: only odd conjugators exist")),
            }
        }
        let ce = Element::Signed(c);
        debug_assert!(self.group.contains(&ce));
        Some(Conjugacy::Conjugate(ce))
    }

    /// Breadth-first search over the conjugacy class of `u`, capped by the
    /// bound. Stores parent links only, so memory is linear in the class.
    fn orbit_conjugacy(&self, u: &Element, v: &Element) -> Conjugacy {
        let (Ok(pu), Ok(pv)) = (self.group.to_perm(u), self.group.to_perm(v)) else {
            return Conjugacy::Distinct("not both in the group");
        };
        let gens = self.group.perm_generators();
        let mut index: HashMap<Permutation, usize> = HashMap::from([(pu.clone(), 0)]);
        let mut nodes: Vec<(Permutation, usize, usize)> = vec![(pu, usize::MAX, usize::MAX)];
        let mut k = 0;
        let mut found = (nodes[0].0 == pv).then_some(0);
        while found.is_none() && k < nodes.len() {
            for (gi, s) in gens.iter().enumerate() {
                let c = nodes[k].0.conjugate_by(s);
                if index.contains_key(&c) {
                    continue;
                }
                if nodes.len() as u64 >= self.bound.min(ORBIT_CAP) {
                    return Conjugacy::Unknown;
                }
                index.insert(c.clone(), nodes.len());
                let hit = c == pv;
                nodes.push((c, k, gi));
                if hit {
                    found = Some(nodes.len() - 1);
                    break;
                }
            }
            k += 1;
        }
        let Some(mut at) = found else { return Conjugacy::Distinct("class orbit exhausted") };
        let mut word = Vec::new();
        while nodes[at].1 != usize::MAX {
            word.push(nodes[at].2);
            at = nodes[at].1;
        }
        let mut c = self.group.identity();
        for &gi in word.iter().rev() {
            c = c.mul(&self.group.generators()[gi]).expect("same group");
        }
        Conjugacy::Conjugate(c)
    }
}

/// An element of odd sign count commuting with `u`, if one exists: the sign
/// flip on an odd positive cycle, or a negative cycle itself.
pub(crate) fn odd_centralizer_element(u: &SignedPermutation) -> Option<SignedPermutation> {
    let n = u.degree();
    for (cycle, negative) in u.signed_cycles() {
        if negative {
            let mut images: Vec<usize> = (0..n).collect();
            let mut signs = vec![false; n];
            for &p in &cycle {
                images[p] = u.perm().image(p);
                signs[p] = u.signs()[p];
            }
            let perm = Permutation::from_images(images).expect("cycle restriction");
            return SignedPermutation::new(perm, signs).ok();
        }
        if cycle.len() % 2 == 1 {
            let mut signs = vec![false; n];
            for &p in &cycle {
                signs[p] = true;
            }
            return SignedPermutation::new(Permutation::identity(n), signs).ok();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(s, n).unwrap()
    }

    #[test]
    fn split_classes_in_d4() {
        let g = RealizedGroup::build_coxeter(CoxeterType::D(4)).unwrap();
        let ctx = GroupContext::new(&g);
        let u = Element::Signed(sp("(1,2)(3,4)", 4));
        let v = Element::Signed(sp("(1,_2)(3,4)", 4));
        // (1,_2) has a sign on one column only, so v is still a positive
        // 2-cycle times a positive 2-cycle up to the B-class.
        match ctx.conjugacy(&u, &v) {
            Conjugacy::Conjugate(c) => assert_eq!(u.conj(&c).unwrap(), v),
            Conjugacy::Distinct(_) => {
                // Cross-check with the class table.
                let t = ctx.table().unwrap();
                let pu = g.to_perm(&u).unwrap();
                let pv = g.to_perm(&v).unwrap();
                assert_ne!(t.class_of_element(&pu), t.class_of_element(&pv));
            }
            Conjugacy::Unknown => panic!("small group"),
        }
    }

    #[test]
    fn signed_verdicts_agree_with_class_table() {
        for t in [CoxeterType::D(4), CoxeterType::D(5), CoxeterType::B(4), CoxeterType::A(4)] {
            let g = RealizedGroup::build_coxeter(t).unwrap();
            let ctx = GroupContext::new(&g);
            let table = ctx.table().unwrap();
            let reps: Vec<Element> =
                table.elements().iter().step_by(7).take(60).map(|p| g.from_perm(p).unwrap()).collect();
            for u in &reps {
                for v in &reps {
                    let same = table.class_of_element(&g.to_perm(u).unwrap()) == table.class_of_element(&g.to_perm(v).unwrap());
                    match ctx.signed_conjugacy(u.as_signed().unwrap(), v.as_signed().unwrap()).unwrap() {
                        Conjugacy::Conjugate(c) => {
                            assert!(same, "{t}: {u} {v}");
                            assert!(g.contains(&c));
                            assert_eq!(u.conj(&c).unwrap(), *v);
                        }
                        Conjugacy::Distinct(_) => assert!(!same, "{t}: {u} {v}"),
                        Conjugacy::Unknown => unreachable!(),
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_search_finds_matrix_conjugators() {
        let g = RealizedGroup::build_coxeter(CoxeterType::H3).unwrap();
        let ctx = GroupContext::with_bound(&g, 1000);
        let s = &g.generators()[0];
        let h = g.generators()[1].mul(&g.generators()[2]).unwrap();
        let v = s.conj(&h).unwrap();
        match ctx.orbit_conjugacy(s, &v) {
            Conjugacy::Conjugate(c) => assert_eq!(s.conj(&c).unwrap(), v),
            other => panic!("{other:?}"),
        }
        let r = g.generators()[1].mul(&g.generators()[2]).unwrap();
        assert!(matches!(ctx.orbit_conjugacy(s, &r), Conjugacy::Distinct(_)));
    }
}
