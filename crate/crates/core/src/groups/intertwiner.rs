//! Change of basis from a matrix group given in its own coordinates to the
//! simple-root coordinates used by [`RealizedGroup::build_coxeter`], for the
//! simply laced exceptional types.
//!
//! The root set is recovered as the orbit of `e₁ − e₂`, a generic linear
//! functional picks a positive system, and the simple roots are matched to
//! the Dynkin diagram (two simple roots are joined iff their sum is a root).

use std::collections::HashSet;

use super::action::{RootSystem, Vector};
use super::{CoxeterType, GroupError, RealizedGroup};
use crate::algebra::{ExactMatrix, ExactScalar};
use crate::stabchain::StabChain;

const ORBIT_BOUND: usize = 4096;

/// Maps matrices in some basis to the root-basis realization.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    /// Columns are the simple roots, in diagram order, in the source basis.
    simple: ExactMatrix,
    simple_inv: ExactMatrix,
}

fn root_orbit(gens: &[ExactMatrix], seed: Vector) -> Result<Vec<Vector>, GroupError> {
    let mut seen: HashSet<Vector> = HashSet::from([seed.clone()]);
    let mut out = vec![seed];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let w = g.apply(&out[k])?;
            if seen.insert(w.clone()) {
                if out.len() >= ORBIT_BOUND {
                    return Err(GroupError::Construction("root orbit exceeds safety bound".into()));
                }
                out.push(w);
            }
        }
        k += 1;
    }
    Ok(out)
}

fn add(a: &[ExactScalar], b: &[ExactScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Roots of the group generated by `gens`, as the orbit of `e₁ − e₂`.
pub fn figure_roots(gens: &[ExactMatrix]) -> Result<Vec<Vector>, GroupError> {
    let dim = gens.first().ok_or_else(|| GroupError::Construction("no generators".into()))?.dim();
    let mut seed = vec![ExactScalar::zero(); dim];
    seed[0] = ExactScalar::one();
    seed[1] = ExactScalar::from_int(-1);
    root_orbit(gens, seed)
}

/// Order of the group generated by `gens`, through its action on
/// [`figure_roots`]. This does not depend on any basis matching.
pub fn figure_group_order(gens: &[ExactMatrix]) -> Result<num_bigint::BigUint, GroupError> {
    let dim = gens[0].dim();
    let roots = RootSystem::from_roots(dim, figure_roots(gens)?)?;
    let perms = gens.iter().map(|g| roots.permutation_of(g)).collect::<Result<Vec<_>, _>>()?;
    Ok(StabChain::new(roots.len(), &perms).order())
}

fn match_diagram(
    adj: &[Vec<bool>],
    target: &[Vec<u64>],
    assigned: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = assigned.len();
    if k == target.len() {
        return true;
    }
    for cand in 0..adj.len() {
        if used[cand] {
            continue;
        }
        let ok = (0..k).all(|i| adj[assigned[i]][cand] == (target[i][k] == 3));
        if ok {
            used[cand] = true;
            assigned.push(cand);
            if match_diagram(adj, target, assigned, used) {
                return true;
            }
            assigned.pop();
            used[cand] = false;
        }
    }
    false
}

impl Intertwiner {
    /// Finds the basis change for a group of simply laced type `t` generated
    /// by `gens` in their own coordinates.
    pub fn discover(t: CoxeterType, gens: &[ExactMatrix]) -> Result<Self, GroupError> {
        let rank = t.rank();
        let expected_roots = match t {
            CoxeterType::E6 => 72,
            CoxeterType::E7 => 126,
            CoxeterType::E8 => 240,
            _ => return Err(GroupError::InvalidType(format!("{t} is not simply laced exceptional"))),
        };
        if gens.iter().any(|g| g.dim() != rank) {
            return Err(GroupError::Construction(format!("matrices must be {rank}x{rank}")));
        }
        let roots = figure_roots(gens)?;
        if roots.len() != expected_roots {
            return Err(GroupError::Construction(format!("found {} roots, expected {expected_roots}", roots.len())));
        }
        let all: HashSet<&Vector> = roots.iter().collect();
        // Weights 1, 10, 100, ... keep the functional nonzero on every root
        // for the coordinate sizes that occur; re-tried if not.
        let mut weight_base = 10i64;
        let positive = loop {
            let f = |v: &Vector| {
                let mut acc = ExactScalar::zero();
                let mut w = ExactScalar::one();
                for x in v {
                    acc = &acc + &(x * &w);
                    w = &w * &ExactScalar::from_int(weight_base);
                }
                acc
            };
            let values: Vec<ExactScalar> = roots.iter().map(f).collect();
            if values.iter().all(|v| !v.is_zero()) {
                break roots
                    .iter()
                    .zip(values)
                    .filter(|(_, v)| v.signum().is_gt())
                    .map(|(r, _)| r.clone())
                    .collect::<Vec<_>>();
            }
            weight_base += 7;
            if weight_base > 1000 {
                return Err(GroupError::Construction("no generic functional found".into()));
            }
        };
        let pos_set: HashSet<&Vector> = positive.iter().collect();
        let mut decomposable: HashSet<Vector> = HashSet::new();
        for (i, a) in positive.iter().enumerate() {
            for b in &positive[i + 1..] {
                let s = add(a, b);
                if pos_set.contains(&s) {
                    decomposable.insert(s);
                }
            }
        }
        let simple: Vec<Vector> = positive.iter().filter(|r| !decomposable.contains(*r)).cloned().collect();
        if simple.len() != rank {
            return Err(GroupError::Construction(format!("found {} simple roots, expected {rank}", simple.len())));
        }
        let adj: Vec<Vec<bool>> =
            simple.iter().map(|a| simple.iter().map(|b| all.contains(&add(a, b))).collect()).collect();
        let mut assigned = Vec::new();
        let mut used = vec![false; rank];
        if !match_diagram(&adj, &t.coxeter_matrix(), &mut assigned, &mut used) {
            return Err(GroupError::Construction("simple roots do not form the expected diagram".into()));
        }
        let rows = (0..rank).map(|i| assigned.iter().map(|&c| simple[c][i].clone()).collect()).collect();
        let simple = ExactMatrix::from_rows(rows)?;
        let simple_inv = simple.inverse()?;
        Ok(Self { simple, simple_inv })
    }

    /// `S⁻¹ · M · S`.
    pub fn to_root_basis(&self, m: &ExactMatrix) -> Result<ExactMatrix, GroupError> {
        Ok(self.simple_inv.mul(m)?.mul(&self.simple)?)
    }

    pub fn from_root_basis(&self, m: &ExactMatrix) -> Result<ExactMatrix, GroupError> {
        Ok(self.simple.mul(m)?.mul(&self.simple_inv)?)
    }

    /// Converts and certifies membership in `group`.
    pub fn member(&self, group: &RealizedGroup, m: &ExactMatrix) -> Result<super::Element, GroupError> {
        group.membership_matrix(&self.to_root_basis(m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_a_conjugated_realization() {
        let g = RealizedGroup::build_coxeter(CoxeterType::E6).unwrap();
        // Basis with b₁ = α₁ + α₂, b₂ = α₂, so that e₁ − e₂ reads as α₁.
        let mut rows: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| i64::from(i == j)).collect()).collect();
        rows[1][0] = 1;
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let b = ExactMatrix::from_int_rows(&refs).unwrap();
        let b_inv = b.inverse().unwrap();
        let moved: Vec<ExactMatrix> = g
            .generators()
            .iter()
            .map(|e| b_inv.mul(e.as_matrix().unwrap()).unwrap().mul(&b).unwrap())
            .collect();
        let tw = Intertwiner::discover(CoxeterType::E6, &moved).unwrap();
        for m in &moved {
            assert!(tw.member(&g, m).is_ok());
        }
        assert_eq!(figure_group_order(&moved).unwrap(), CoxeterType::E6.order());
    }
}
