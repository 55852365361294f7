use std::collections::HashMap;

use super::element::{Dihedral, Element};
use super::GroupError;
use crate::algebra::{ExactMatrix, ExactScalar};
use crate::perms::{Permutation, SignedPermutation};

/// Largest root system we expect (E₈ has 240); anything bigger means a
/// generator matrix is wrong.
const ROOT_BOUND: usize = 4096;

pub type Vector = Vec<ExactScalar>;

/// Root system of a matrix reflection group, used as its point set.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dim: usize,
    roots: Vec<Vector>,
    index: HashMap<Vector, usize>,
    /// Root indices forming a maximal independent set.
    basis_roots: Vec<usize>,
    /// Extra vectors fixed by the whole group, completing a basis of the space.
    complement: Vec<Vector>,
    basis_inv: ExactMatrix,
}

fn normalize(v: &[ExactScalar]) -> Option<Vector> {
    let lead = v.iter().find(|e| !e.is_zero())?;
    let inv = lead.inverse().ok()?;
    Some(v.iter().map(|e| e * &inv).collect())
}

/// Row-reduces `rows`, returning the pivot columns; used for rank and null
/// space computations.
fn row_reduce(rows: &mut [Vector]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|e| e * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                rows[i] = rows[i].iter().zip(&rows[r]).map(|(a, b)| a - &(&f * b)).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn rank(vectors: &[Vector]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows).len()
}

/// Basis of `{w : ⟨v, w⟩ = 0 for all v in rows}` under the standard form.
fn null_space(rows: &[Vector], dim: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut w = vec![ExactScalar::zero(); dim];
            w[f] = ExactScalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                w[p] = -&m[r][f];
            }
            w
        })
        .collect()
}

impl RootSystem {
    /// Roots generated by the reflections `gens`: each generator contributes
    /// the direction of `I − s` unless that direction is already present.
    pub fn from_reflections(gens: &[ExactMatrix]) -> Result<Self, GroupError> {
        let dim = gens.first().ok_or_else(|| GroupError::Construction("no generators".into()))?.dim();
        let mut roots: Vec<Vector> = Vec::new();
        let mut index: HashMap<Vector, usize> = HashMap::new();
        let mut directions: HashMap<Vector, ()> = HashMap::new();
        for s in gens {
            let d = ExactMatrix::identity(dim).sub(s)?;
            let col = (0..dim)
                .map(|j| (0..dim).map(|i| d.get(i, j).clone()).collect::<Vector>())
                .find(|c| c.iter().any(|e| !e.is_zero()))
                .ok_or_else(|| GroupError::Construction("generator is the identity".into()))?;
            let seed = normalize(&col).expect("nonzero");
            if directions.contains_key(&seed) {
                continue;
            }
            let start = roots.len();
            index.insert(seed.clone(), start);
            roots.push(seed);
            let mut k = start;
            while k < roots.len() {
                for g in gens {
                    let w = g.apply(&roots[k])?;
                    if !index.contains_key(&w) {
                        if roots.len() >= ROOT_BOUND {
                            return Err(GroupError::Construction("root orbit exceeds safety bound".into()));
                        }
                        index.insert(w.clone(), roots.len());
                        roots.push(w);
                    }
                }
                k += 1;
            }
            for r in &roots[start..] {
                directions.insert(normalize(r).expect("nonzero"), ());
            }
        }
        Self::from_roots(dim, roots)
    }

    /// Uses an explicit root list (closed under the group) as the point set.
    pub fn from_roots(dim: usize, roots: Vec<Vector>) -> Result<Self, GroupError> {
        let index: HashMap<Vector, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut basis_roots = Vec::new();
        let mut chosen: Vec<Vector> = Vec::new();
        for (i, r) in roots.iter().enumerate() {
            chosen.push(r.clone());
            if rank(&chosen) == chosen.len() {
                basis_roots.push(i);
            } else {
                chosen.pop();
            }
            if chosen.len() == dim {
                break;
            }
        }
        let complement = null_space(&chosen, dim);
        let mut cols: Vec<Vector> = chosen;
        cols.extend(complement.iter().cloned());
        let b = ExactMatrix::from_rows((0..dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())?;
        let basis_inv = b.inverse()?;
        Ok(Self { dim, roots, index, basis_roots, complement, basis_inv })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn index_of(&self, v: &[ExactScalar]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// The permutation a matrix induces on the roots, if it preserves them.
    pub fn permutation_of(&self, m: &ExactMatrix) -> Result<Permutation, GroupError> {
        if m.dim() != self.dim {
            return Err(GroupError::NotInGroup(format!("dimension {} vs {}", m.dim(), self.dim)));
        }
        let images = self
            .roots
            .iter()
            .map(|r| {
                let w = m.apply(r)?;
                self.index_of(&w).ok_or_else(|| GroupError::NotInGroup("matrix does not preserve the root set".into()))
            })
            .collect::<Result<Vec<usize>, GroupError>>()?;
        let p = Permutation::from_images(images)
            .map_err(|_| GroupError::NotInGroup("matrix is not injective on roots".into()))?;
        // Off the root span the permutation says nothing; require the fixed
        // complement to stay fixed.
        if !self.complement.is_empty() && self.matrix_of(&p) != *m {
            return Err(GroupError::NotInGroup("matrix moves the complement of the root span".into()));
        }
        Ok(p)
    }

    /// Rebuilds the matrix from a root permutation: `M = B′·B⁻¹`, fixing
    /// the complement of the root span.
    pub fn matrix_of(&self, p: &Permutation) -> ExactMatrix {
        let mut cols: Vec<&Vector> = self.basis_roots.iter().map(|&i| &self.roots[p.image(i)]).collect();
        cols.extend(self.complement.iter());
        let bp = ExactMatrix::from_rows((0..self.dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
            .expect("square");
        bp.mul(&self.basis_inv).expect("same dimension")
    }
}

/// A faithful permutation action of a realized group.
#[derive(Clone, Debug)]
pub enum FiniteAction {
    /// Signed permutations on the `2n` points `±e_j`.
    SignedPoints(usize),
    /// Plain permutations (or unsigned signed permutations) on `n` points.
    Natural(usize),
    Roots(RootSystem),
    /// Right regular action of W(I₂(k)) on its `2k` elements.
    Regular(usize),
    /// Disjoint union, for pairs.
    Sum(Box<FiniteAction>, Box<FiniteAction>),
}

impl FiniteAction {
    pub fn degree(&self) -> usize {
        match self {
            FiniteAction::SignedPoints(n) => 2 * n,
            FiniteAction::Natural(n) => *n,
            FiniteAction::Roots(r) => r.len(),
            FiniteAction::Regular(k) => 2 * k,
            FiniteAction::Sum(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FiniteAction::SignedPoints(n) => format!("{} signed points", 2 * n),
            FiniteAction::Natural(n) => format!("{n} points"),
            FiniteAction::Roots(r) => format!("{} roots", r.len()),
            FiniteAction::Regular(k) => format!("regular on {} elements", 2 * k),
            FiniteAction::Sum(a, b) => format!("{} + {}", a.describe(), b.describe()),
        }
    }

    pub fn permutation_of(&self, g: &Element) -> Result<Permutation, GroupError> {
        let wrong = || GroupError::NotInGroup(format!("{g} does not match the {} action", self.describe()));
        match (self, g) {
            (FiniteAction::SignedPoints(n), Element::Signed(p)) if p.degree() == *n => Ok(p.to_signed_point_perm()),
            (FiniteAction::Natural(n), Element::Signed(p)) if p.degree() == *n && p.negative_count() == 0 => {
                Ok(p.perm().clone())
            }
            (FiniteAction::Natural(n), Element::Perm(p)) if p.degree() == *n => Ok(p.clone()),
            (FiniteAction::Roots(r), Element::Matrix(m)) => r.permutation_of(m),
            (FiniteAction::Regular(k), Element::Dihedral(d)) if d.k == *k => {
                let images = (0..2 * k).map(|p| Dihedral::from_point(*k, p).compose(d).point()).collect();
                Ok(Permutation::from_images(images).expect("regular action"))
            }
            (FiniteAction::Sum(a, b), Element::Pair(x, y)) => Ok(a.permutation_of(x)?.direct_sum(&b.permutation_of(y)?)),
            _ => Err(wrong()),
        }
    }

    /// Reads an element back from its action. `template` selects the
    /// representation where more than one is possible.
    pub fn element_of(&self, p: &Permutation, template: &Element) -> Result<Element, GroupError> {
        let bad = || GroupError::NotInGroup(format!("permutation {p} is not induced by an element"));
        match (self, template) {
            (FiniteAction::SignedPoints(_), _) => {
                SignedPermutation::from_signed_point_perm(p).map(Element::Signed).ok_or_else(bad)
            }
            (FiniteAction::Natural(_), Element::Signed(_)) => Ok(Element::Signed(SignedPermutation::from_perm(p.clone()))),
            (FiniteAction::Natural(_), _) => Ok(Element::Perm(p.clone())),
            (FiniteAction::Roots(r), _) => Ok(Element::Matrix(r.matrix_of(p))),
            (FiniteAction::Regular(k), _) => {
                let d = Dihedral::from_point(*k, p.image(0));
                if self.permutation_of(&Element::Dihedral(d))? == *p {
                    Ok(Element::Dihedral(d))
                } else {
                    Err(bad())
                }
            }
            (FiniteAction::Sum(a, b), Element::Pair(ta, tb)) => {
                let (da, db) = (a.degree(), b.degree());
                let pa = p.restrict(0, da).ok_or_else(bad)?;
                let pb = p.restrict(da, db).ok_or_else(bad)?;
                Ok(Element::Pair(Box::new(a.element_of(&pa, ta)?), Box::new(b.element_of(&pb, tb)?)))
            }
            _ => Err(bad()),
        }
    }
}
