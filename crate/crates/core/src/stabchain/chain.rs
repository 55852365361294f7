use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::perms::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// Position of each point in `orbit`, or `NONE`.
    pos: Vec<u32>,
    /// `u[k]` maps `base` to `orbit[k]`; `u_inv[k]` is its inverse.
    u: Vec<Permutation>,
    u_inv: Vec<Permutation>,
    /// For each generator, how many orbit points have had their Schreier
    /// generator sifted.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base] = 0;
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            u: vec![Permutation::identity(degree)],
            u_inv: vec![Permutation::identity(degree)],
            checked: Vec::new(),
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        self.checked.push(0);
        self.close_orbit();
    }

    fn close_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in 0..self.gens.len() {
                let gamma = self.gens[s].image(beta);
                if self.pos[gamma] == NONE {
                    let u = self.u[k].compose(&self.gens[s]);
                    self.pos[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma);
                    self.u_inv.push(u.inverse());
                    self.u.push(u);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set with full transversals.
///
/// Built by deterministic Schreier–Sims; base points are chosen as the least
/// point moved by the first generator that needs a new level.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = Self { degree, levels: Vec::new() };
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree");
            chain.add_generator(g);
        }
        chain
    }

    pub fn trivial(degree: usize) -> Self {
        Self { degree, levels: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `g` to the group and restores the chain. Returns false when `g`
    /// was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.strip_from(g.clone(), 0);
        if h.is_identity() {
            return false;
        }
        self.insert(h, 0, j);
        self.complete(j);
        true
    }

    fn insert(&mut self, h: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = (0..self.degree).find(|&i| h.image(i) != i).expect("non-identity");
            self.levels.push(Level::new(base, self.degree));
        }
        for l in from..=to {
            self.levels[l].add_gen(h.clone());
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let lvl = i as usize;
            match self.next_schreier(lvl) {
                None => i -= 1,
                Some(s) => {
                    let (h, j) = self.strip_from(s, lvl + 1);
                    if h.is_identity() {
                        continue;
                    }
                    self.insert(h, lvl + 1, j);
                    i = j as isize;
                }
            }
        }
    }

    /// Next unchecked Schreier generator at level `l`, marking it checked.
    fn next_schreier(&mut self, l: usize) -> Option<Permutation> {
        let level = &mut self.levels[l];
        for s in 0..level.gens.len() {
            while level.checked[s] < level.orbit.len() {
                let k = level.checked[s];
                level.checked[s] += 1;
                let gen = &level.gens[s];
                let gamma = gen.image(level.orbit[k]);
                let kk = level.pos[gamma] as usize;
                let sg = level.u[k].compose(gen).compose(&level.u_inv[kk]);
                if !sg.is_identity() {
                    return Some(sg);
                }
            }
        }
        None
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`len()` when it went all the way through).
    fn strip_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.image(level.base);
            let k = level.pos[beta];
            if k == NONE {
                return (g, l);
            }
            g = g.compose(&level.u_inv[k as usize]);
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip_from(g.clone(), 0).0.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Uniformly random element: one random coset representative per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.orbit.len());
            g = g.compose(&level.u[k]);
        }
        g
    }

    /// Mixed-radix index of a member, a bijection onto `0..order`.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut g = g.clone();
        let mut r = 0u64;
        let mut stride = 1u64;
        for level in &self.levels {
            let k = level.pos[g.image(level.base)];
            if k == NONE {
                return None;
            }
            r += k as u64 * stride;
            stride = stride.checked_mul(level.orbit.len() as u64)?;
            g = g.compose(&level.u_inv[k as usize]);
        }
        g.is_identity().then_some(r)
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(&self, mut r: u64) -> Permutation {
        let mut digits = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let m = level.orbit.len() as u64;
            digits.push((r % m) as usize);
            r /= m;
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &k) in self.levels.iter().zip(&digits).rev() {
            g = g.compose(&level.u[k]);
        }
        g
    }

    /// All elements, in rank order. Fails when the order exceeds `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Permutation>, super::StabError> {
        let n = self.order_u64().filter(|&n| n <= bound).ok_or(super::StabError::BoundExceeded {
            what: "element enumeration",
            bound,
        })?;
        Ok((0..n).map(|r| self.unrank(r)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn trivial_group() {
        let c = StabChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(c.order(), BigUint::one());
        assert!(c.contains(&Permutation::identity(4)));
        assert!(!c.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..9usize {
            let c = StabChain::new(n, &[cyc(n, &[0, 1]), cyc(n, &(0..n).collect::<Vec<_>>())]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(c.order_u64(), Some(fact));
        }
    }

    #[test]
    fn klein_four() {
        let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let c = StabChain::new(4, &[a, b]);
        assert_eq!(c.order_u64(), Some(4));
        assert!(!c.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn rank_is_a_bijection() {
        let c = StabChain::new(5, &[cyc(5, &[0, 1, 2]), cyc(5, &[2, 3, 4])]);
        assert_eq!(c.order_u64(), Some(60));
        let mut seen = [false; 60];
        for r in 0..60 {
            let g = c.unrank(r);
            assert!(g.is_even());
            assert_eq!(c.rank(&g), Some(r));
            seen[r as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(c.rank(&cyc(5, &[0, 1])), None);
    }
}
