use std::fmt;

use num_integer::Integer;

use super::GroupError;
use crate::algebra::{ExactMatrix, MatrixLiteral};
use crate::perms::{format_plain, Permutation, SignedPermutation};

/// Element of W(I₂(k)): the map `i ↦ ±i + r` on ℤ/k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub k: usize,
    pub r: usize,
    pub flip: bool,
}

impl Dihedral {
    pub fn identity(k: usize) -> Self {
        Self { k, r: 0, flip: false }
    }

    fn apply(&self, i: usize) -> usize {
        let base = if self.flip { (self.k - i % self.k) % self.k } else { i };
        (base + self.r) % self.k
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { k: self.k, r: other.apply(self.r), flip: self.flip ^ other.flip }
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self { k: self.k, r: (self.k - self.r) % self.k, flip: false }
        }
    }

    pub fn order(&self) -> u64 {
        if self.flip {
            2
        } else {
            (self.k / self.r.gcd(&self.k)) as u64
        }
    }

    /// Index in the regular action: rotations first, then reflections.
    pub fn point(&self) -> usize {
        self.r + if self.flip { self.k } else { 0 }
    }

    pub fn from_point(k: usize, p: usize) -> Self {
        Self { k, r: p % k, flip: p >= k }
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r, self.flip) {
            (0, false) => write!(f, "e"),
            (r, false) => write!(f, "r^{r}"),
            (0, true) => write!(f, "s"),
            (r, true) => write!(f, "s r^{r}"),
        }
    }
}

/// A group element in one of the concrete representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Signed(SignedPermutation),
    Matrix(ExactMatrix),
    Dihedral(Dihedral),
    Perm(Permutation),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    fn kind(&self) -> &'static str {
        match self {
            Element::Signed(_) => "signed permutation",
            Element::Matrix(_) => "matrix",
            Element::Dihedral(_) => "dihedral",
            Element::Perm(_) => "permutation",
            Element::Pair(..) => "pair",
        }
    }

    pub fn identity_like(&self) -> Element {
        match self {
            Element::Signed(p) => Element::Signed(SignedPermutation::identity(p.degree())),
            Element::Matrix(m) => Element::Matrix(ExactMatrix::identity(m.dim())),
            Element::Dihedral(d) => Element::Dihedral(Dihedral::identity(d.k)),
            Element::Perm(p) => Element::Perm(Permutation::identity(p.degree())),
            Element::Pair(a, b) => Element::Pair(Box::new(a.identity_like()), Box::new(b.identity_like())),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Signed(p) => p.is_identity(),
            Element::Matrix(m) => m.is_identity(),
            Element::Dihedral(d) => d.r == 0 && !d.flip,
            Element::Perm(p) => p.is_identity(),
            Element::Pair(a, b) => a.is_identity() && b.is_identity(),
        }
    }

    /// `self` then `other`. For matrices acting on column vectors this is
    /// the raw product `other · self`.
    pub fn mul(&self, other: &Element) -> Result<Element, GroupError> {
        let mismatch = || GroupError::ParentMismatch(format!("{} with {}", self.kind(), other.kind()));
        Ok(match (self, other) {
            (Element::Signed(a), Element::Signed(b)) => {
                Element::Signed(a.checked_compose(b).map_err(|_| mismatch())?)
            }
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(b.mul(a).map_err(|_| mismatch())?),
            (Element::Dihedral(a), Element::Dihedral(b)) if a.k == b.k => Element::Dihedral(a.compose(b)),
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(a.checked_compose(b).map_err(|_| mismatch())?),
            (Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
                Element::Pair(Box::new(a1.mul(a2)?), Box::new(b1.mul(b2)?))
            }
            _ => return Err(mismatch()),
        })
    }

    pub fn inv(&self) -> Element {
        match self {
            Element::Signed(p) => Element::Signed(p.inverse()),
            Element::Matrix(m) => Element::Matrix(m.inverse().expect("group elements are invertible")),
            Element::Dihedral(d) => Element::Dihedral(d.inverse()),
            Element::Perm(p) => Element::Perm(p.inverse()),
            Element::Pair(a, b) => Element::Pair(Box::new(a.inv()), Box::new(b.inv())),
        }
    }

    pub fn pow(&self, e: i64) -> Element {
        match self {
            Element::Signed(p) => Element::Signed(p.pow(e)),
            Element::Perm(p) => Element::Perm(p.pow(e)),
            Element::Pair(a, b) => Element::Pair(Box::new(a.pow(e)), Box::new(b.pow(e))),
            _ => {
                let base = if e < 0 { self.inv() } else { self.clone() };
                let mut acc = self.identity_like();
                let mut b = base;
                let mut e = e.unsigned_abs();
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.mul(&b).expect("same parent");
                    }
                    e >>= 1;
                    if e > 0 {
                        b = b.mul(&b).expect("same parent");
                    }
                }
                acc
            }
        }
    }

    /// `h⁻¹ · self · h`.
    pub fn conj(&self, h: &Element) -> Result<Element, GroupError> {
        h.inv().mul(self)?.mul(h)
    }

    /// Order by iteration; matrices stop after `bound` steps.
    pub fn order(&self, bound: u64) -> Option<u64> {
        match self {
            Element::Signed(p) => Some(p.order()),
            Element::Perm(p) => Some(p.order()),
            Element::Dihedral(d) => Some(d.order()),
            Element::Matrix(m) => m.order(bound),
            Element::Pair(a, b) => Some(a.order(bound)?.lcm(&b.order(bound)?)),
        }
    }

    pub fn as_signed(&self) -> Option<&SignedPermutation> {
        match self {
            Element::Signed(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&ExactMatrix> {
        match self {
            Element::Matrix(m) => Some(m),
            _ => None,
        }
    }

    /// Representation-level trace, where one exists.
    pub fn trace(&self) -> Option<crate::algebra::ExactScalar> {
        match self {
            Element::Signed(p) => Some(p.trace().into()),
            Element::Matrix(m) => Some(m.trace()),
            _ => None,
        }
    }

    pub fn is_diagonal(&self) -> Option<bool> {
        match self {
            Element::Signed(p) => Some(p.is_diagonal()),
            Element::Matrix(m) => Some(m.is_diagonal()),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Signed(p) => {
                let s = p.to_string();
                write!(f, "{}", if s.is_empty() { "()" } else { &s })
            }
            Element::Perm(p) => {
                let s = format_plain(p);
                write!(f, "{}", if s.is_empty() { "()" } else { &s })
            }
            Element::Dihedral(d) => write!(f, "{d}"),
            Element::Matrix(m) => match MatrixLiteral::from_matrix(m) {
                Ok(l) => write!(f, "{}", serde_json::to_string(&l).map_err(|_| fmt::Error)?),
                Err(_) => write!(f, "{m:?}"),
            },
            Element::Pair(a, b) => write!(f, "[{a} ; {b}]"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
