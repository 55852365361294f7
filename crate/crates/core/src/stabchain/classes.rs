use std::collections::{HashSet, VecDeque};

use super::{StabChain, StabError};
use crate::perms::Permutation;

/// Default cap on enumerations and class orbits.
pub const DEFAULT_BOUND: u64 = 1_000_000;

/// Conjugacy class of `g` in `⟨gens⟩`, by orbit under generator conjugation.
pub fn conjugacy_class(gens: &[Permutation], g: &Permutation, bound: u64) -> Result<Vec<Permutation>, StabError> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::from([g.clone()]);
    seen.insert(g.clone());
    let mut out = Vec::new();
    while let Some(h) = queue.pop_front() {
        for s in gens {
            let c = h.conjugate_by(s);
            if !seen.contains(&c) {
                if seen.len() as u64 >= bound {
                    return Err(StabError::BoundExceeded { what: "conjugacy class", bound });
                }
                seen.insert(c.clone());
                queue.push_back(c);
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// Fixed-width bitset over class indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ClassSet(Vec<u64>);

impl ClassSet {
    pub fn with_capacity(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    pub fn insert(&mut self, c: usize) {
        self.0[c / 64] |= 1 << (c % 64);
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.get(c / 64).is_some_and(|w| w >> (c % 64) & 1 == 1)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Vec<usize> {
        self.iter().filter(|&c| other.contains(c)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub representative: usize,
    pub size: usize,
    pub order: u64,
}

/// Every element of a small group, indexed by chain rank, with its
/// conjugacy class.
///
/// Classes are numbered by (element order, class size, rank of the first
/// member), which is deterministic for a fixed generating set.
#[derive(Clone, Debug)]
pub struct ClassTable {
    chain: StabChain,
    elements: Vec<Permutation>,
    class_of: Vec<u32>,
    classes: Vec<ClassInfo>,
}

impl ClassTable {
    pub fn new(chain: &StabChain, gens: &[Permutation], bound: u64) -> Result<Self, StabError> {
        let elements = chain.elements(bound)?;
        let n = elements.len();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw: Vec<ClassInfo> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            let mut queue = vec![start];
            let mut size = 0;
            while let Some(i) = queue.pop() {
                size += 1;
                for s in gens {
                    let c = elements[i].conjugate_by(s);
                    let j = chain.rank(&c).expect("closed under conjugation") as usize;
                    if raw_class[j] == u32::MAX {
                        raw_class[j] = id;
                        queue.push(j);
                    }
                }
            }
            raw.push(ClassInfo { representative: start, size, order: elements[start].order() });
        }
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&c| (raw[c].order, raw[c].size, raw[c].representative));
        let mut renumber = vec![0u32; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            renumber[old] = new as u32;
        }
        let classes = perm.iter().map(|&c| raw[c].clone()).collect();
        let class_of = raw_class.iter().map(|&c| renumber[c as usize]).collect();
        Ok(Self { chain: chain.clone(), elements, class_of, classes })
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.chain.rank(g).map(|r| r as usize)
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_of_element(&self, g: &Permutation) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of(i))
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.class_of(i) == c)
    }

    /// Classes of all nontrivial powers of `g`.
    pub fn power_classes(&self, g: &Permutation, into: &mut ClassSet) {
        let o = g.order();
        let mut p = g.clone();
        for _ in 1..o {
            into.insert(self.class_of_element(&p).expect("member"));
            p = p.compose(g);
        }
    }

    /// Σ(x, y) as a set of classes.
    pub fn sigma(&self, x: &Permutation, y: &Permutation) -> ClassSet {
        let mut s = ClassSet::with_capacity(self.class_count());
        self.power_classes(x, &mut s);
        self.power_classes(y, &mut s);
        self.power_classes(&x.compose(y), &mut s);
        s
    }

    /// Element indices of the union of the given classes.
    pub fn expand(&self, set: &ClassSet) -> Vec<usize> {
        (0..self.len()).filter(|&i| set.contains(self.class_of(i))).collect()
    }

    /// The central elements other than the identity.
    pub fn central_nontrivial(&self) -> Vec<usize> {
        self.classes.iter().filter(|c| c.size == 1 && c.order > 1).map(|c| c.representative).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        (0..n - 1).map(|i| Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap()).collect()
    }

    #[test]
    fn class_of_identity_and_transposition() {
        let g = sym(4);
        assert_eq!(conjugacy_class(&g, &Permutation::identity(4), 10).unwrap().len(), 1);
        assert_eq!(conjugacy_class(&g, &g[0], 100).unwrap().len(), 6);
        assert!(conjugacy_class(&g, &g[0], 3).is_err());
    }

    #[test]
    fn sym4_class_table() {
        let g = sym(4);
        let chain = StabChain::new(4, &g);
        let t = ClassTable::new(&chain, &g, 100).unwrap();
        assert_eq!(t.len(), 24);
        assert_eq!(t.class_count(), 5);
        let sizes: Vec<usize> = t.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 6, 8, 6]);
        assert!(t.central_nontrivial().is_empty());
    }

    #[test]
    fn sigma_of_sym3_pair_is_everything() {
        let g = sym(3);
        let chain = StabChain::new(3, &g);
        let t = ClassTable::new(&chain, &g, 100).unwrap();
        let x = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let s = t.sigma(&x, &g[0]);
        assert_eq!(t.expand(&s).len(), 5);
    }

    #[test]
    fn bound_is_enforced() {
        let g = sym(6);
        let chain = StabChain::new(6, &g);
        assert!(ClassTable::new(&chain, &g, 100).is_err());
    }
}
