use std::fmt;

use num_integer::Integer;

use super::{notation, PermError, Permutation};
use crate::algebra::{ExactMatrix, ExactScalar};

/// A monomial ±1 matrix: basis vector `e_j` goes to `s_j · e_{p(j)}`.
///
/// `signs[j]` is true when column `j` carries the −1, which is exactly the
/// point that gets underlined in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    signs: Box<[bool]>,
}

/// One cycle of the underlying permutation together with the product of the
/// signs met along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SignedCycle {
    pub len: usize,
    pub negative: bool,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, signs: Vec<bool>) -> Result<Self, PermError> {
        if perm.degree() != signs.len() {
            return Err(PermError::DegreeMismatch(perm.degree(), signs.len()));
        }
        Ok(Self { perm, signs: signs.into_boxed_slice() })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: Permutation::identity(n), signs: vec![false; n].into_boxed_slice() }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        let n = perm.degree();
        Self { perm, signs: vec![false; n].into_boxed_slice() }
    }

    /// `−I`, the central element of W(Bₙ).
    pub fn negative_identity(n: usize) -> Self {
        Self { perm: Permutation::identity(n), signs: vec![true; n].into_boxed_slice() }
    }

    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        notation::parse_signed(text, degree)
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s).count()
    }

    /// Membership in W(Dₙ): an even number of −1 entries.
    pub fn is_even_signed(&self) -> bool {
        self.negative_count().is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && !self.signs.iter().any(|&s| s)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let signs = (0..self.degree()).map(|j| self.signs[j] ^ other.signs[self.perm.image(j)]).collect();
        Self { perm: self.perm.compose(&other.perm), signs }
    }

    pub fn checked_compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Self {
        let n = self.degree();
        let mut signs = vec![false; n];
        for j in 0..n {
            signs[self.perm.image(j)] = self.signs[j];
        }
        Self { perm: self.perm.inverse(), signs: signs.into_boxed_slice() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.compose(&b);
            }
        }
        acc
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }

    /// Cycles of the underlying permutation with the sign product along each.
    pub fn signed_cycles(&self) -> Vec<(Vec<usize>, bool)> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| {
                let neg = c.iter().fold(false, |acc, &j| acc ^ self.signs[j]);
                (c, neg)
            })
            .collect()
    }

    /// Signed cycle type, sorted. A complete class invariant in W(Bₙ).
    pub fn cycle_type(&self) -> Vec<SignedCycle> {
        let mut t: Vec<SignedCycle> =
            self.signed_cycles().into_iter().map(|(c, negative)| SignedCycle { len: c.len(), negative }).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.signed_cycles().iter().fold(1u64, |acc, (c, neg)| {
            let l = c.len() as u64 * if *neg { 2 } else { 1 };
            acc.lcm(&l)
        })
    }

    pub fn trace(&self) -> i64 {
        (0..self.degree()).filter(|&j| self.perm.image(j) == j).map(|j| if self.signs[j] { -1 } else { 1 }).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.is_identity()
    }

    /// Monomial matrix: column `j` has `±1` in row `p(j)`.
    pub fn to_matrix(&self) -> ExactMatrix {
        let n = self.degree();
        let mut rows = vec![vec![ExactScalar::zero(); n]; n];
        for j in 0..n {
            rows[self.perm.image(j)][j] = ExactScalar::from_int(if self.signs[j] { -1 } else { 1 });
        }
        ExactMatrix::from_rows(rows).expect("square")
    }

    /// Inverse of [`to_matrix`](Self::to_matrix); `None` unless the matrix is signed-monomial.
    pub fn from_matrix(m: &ExactMatrix) -> Option<Self> {
        let n = m.dim();
        let mut images = vec![usize::MAX; n];
        let mut signs = vec![false; n];
        for j in 0..n {
            for i in 0..n {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if images[j] != usize::MAX {
                    return None;
                }
                match e.to_i64() {
                    Some(1) => {}
                    Some(-1) => signs[j] = true,
                    _ => return None,
                }
                images[j] = i;
            }
            if images[j] == usize::MAX {
                return None;
            }
        }
        let perm = Permutation::from_images(images).ok()?;
        Some(Self { perm, signs: signs.into_boxed_slice() })
    }

    /// Action on the `2n` points `±e_j`: point `j` is `+e_j`, point `n + j` is `−e_j`.
    pub fn signed_point_image(&self, point: usize) -> usize {
        let n = self.degree();
        let (j, neg) = if point < n { (point, false) } else { (point - n, true) };
        let target = self.perm.image(j);
        if neg ^ self.signs[j] {
            target + n
        } else {
            target
        }
    }

    pub fn to_signed_point_perm(&self) -> Permutation {
        let n = self.degree();
        let images = (0..2 * n).map(|p| self.signed_point_image(p) as u16).collect();
        Permutation::from_images_unchecked(images)
    }

    /// Reads back an element from its action on `2n` signed points.
    pub fn from_signed_point_perm(p: &Permutation) -> Option<Self> {
        let n = p.degree() / 2;
        if p.degree() != 2 * n {
            return None;
        }
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for j in 0..n {
            let t = p.image(j);
            let (tgt, neg) = if t < n { (t, false) } else { (t - n, true) };
            let opposite = if neg { tgt } else { tgt + n };
            if p.image(j + n) != opposite {
                return None;
            }
            images.push(tgt);
            signs.push(neg);
        }
        Some(Self { perm: Permutation::from_images(images).ok()?, signs: signs.into_boxed_slice() })
    }

    /// Some `c` with `c⁻¹·self·c = other` in the full hyperoctahedral group,
    /// or `None` when the signed cycle types differ.
    pub fn conjugator_to(&self, other: &Self) -> Option<Self> {
        if self.degree() != other.degree() || self.cycle_type() != other.cycle_type() {
            return None;
        }
        let n = self.degree();
        let key = |c: &(Vec<usize>, bool)| (c.0.len(), c.1);
        let mut a = self.signed_cycles();
        let mut b = other.signed_cycles();
        a.sort_by_key(key);
        b.sort_by_key(key);
        // c maps e_{a_k} to ε_k e_{b_k}; walking each pair of matched cycles
        // the signs are forced except at the start point.
        let mut images = vec![0usize; n];
        let mut signs = vec![false; n];
        for ((ca, _), (cb, _)) in a.iter().zip(&b) {
            let mut eps = false;
            for k in 0..ca.len() {
                let j = ca[k];
                images[j] = cb[k];
                signs[j] = eps;
                // self: e_j -> s_j e_{j'}; other: e_{b_k} -> t e_{b_{k+1}}
                eps = eps ^ self.signs[j] ^ other.signs[cb[k]];
            }
        }
        let c = Self { perm: Permutation::from_images(images).ok()?, signs: signs.into_boxed_slice() };
        debug_assert_eq!(self.conjugate_by(&c), *other);
        Some(c)
    }

    /// Central element twist `x ↦ x·(−I)`.
    pub fn negated(&self) -> Self {
        Self { perm: self.perm.clone(), signs: self.signs.iter().map(|s| !s).collect() }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::format_signed(self))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", notation::format_signed(self), self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(t: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(t, n).unwrap()
    }

    #[test]
    fn displayed_example_matrix() {
        let m = sp("(1,_2,3)(_5)", 5).to_matrix();
        let expect = ExactMatrix::from_int_rows(&[
            &[0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, -1],
        ])
        .unwrap();
        assert_eq!(m, expect);
        assert_eq!(SignedPermutation::from_matrix(&m).unwrap(), sp("(1,_2,3)(_5)", 5));
    }

    #[test]
    fn matrix_of_product_is_reversed_raw_product() {
        let p = sp("(1,_2,3)", 4);
        let q = sp("(_2,4)(_3)", 4);
        let lhs = p.compose(&q).to_matrix();
        let rhs = q.to_matrix().mul(&p.to_matrix()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn signed_cycle_type_of_example() {
        let t = sp("(1,_2,3)(_5)", 5).cycle_type();
        let c = |len, negative| SignedCycle { len, negative };
        assert_eq!(t, vec![c(1, false), c(1, true), c(3, true)]);
    }

    #[test]
    fn order_with_sign_twist() {
        assert_eq!(sp("(1,2,3,4,5,6,7,8,9,10,11)(_12)", 12).order(), 22);
        assert_eq!(sp("(_1,2)", 2).order(), 4);
    }

    #[test]
    fn bn_even_five_cycle() {
        let x1 = sp("(1,2,3,4,5,6,7,8,9,10,11)(_12)", 12);
        let y1 = sp("(12,11,10,9,8,7,6,5,4,3)", 12);
        let w = x1.pow(2).compose(&y1.pow(2));
        assert_eq!(w.perm(), sp("(1,11,2,12,10)", 12).perm());
    }

    #[test]
    fn signed_points_round_trip() {
        let p = sp("(1,_2,3)(_5)", 5);
        let q = p.to_signed_point_perm();
        assert_eq!(SignedPermutation::from_signed_point_perm(&q).unwrap(), p);
        let r = sp("(_2,4)", 5);
        assert_eq!(p.compose(&r).to_signed_point_perm(), q.compose(&r.to_signed_point_perm()));
    }

    #[test]
    fn conjugator_between_same_type() {
        let a = sp("(1,_2,3)(_5)", 6);
        let b = sp("(_6)(2,4,_1)", 6);
        let c = a.conjugator_to(&b).unwrap();
        assert_eq!(a.conjugate_by(&c), b);
        assert!(a.conjugator_to(&sp("(1,2,3)(_5)", 6)).is_none());
    }
}
