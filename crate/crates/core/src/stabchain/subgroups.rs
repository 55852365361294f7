use num_bigint::BigUint;

use super::StabChain;
use crate::perms::Permutation;

/// Normal closure of `seeds` in `⟨gens⟩`.
pub fn normal_closure(degree: usize, gens: &[Permutation], seeds: &[Permutation]) -> StabChain {
    let mut chain = StabChain::trivial(degree);
    let mut todo: Vec<Permutation> = Vec::new();
    for s in seeds {
        if chain.add_generator(s) {
            todo.push(s.clone());
        }
    }
    while let Some(n) = todo.pop() {
        for g in gens {
            let c = n.conjugate_by(g);
            if chain.add_generator(&c) {
                todo.push(c);
            }
        }
    }
    chain
}

pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().compose(&b.inverse()).compose(a).compose(b)
}

/// `G′` as the normal closure of the generator commutators.
pub fn derived_subgroup(degree: usize, gens: &[Permutation]) -> StabChain {
    let mut seeds = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = commutator(&gens[i], &gens[j]);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(degree, gens, &seeds)
}

/// A homomorphism onto C₂, given by its values on the generators and
/// certified by its kernel.
#[derive(Clone, Debug)]
pub struct Character2 {
    /// `true` where the generator maps to −1.
    pub values: Vec<bool>,
    pub kernel: StabChain,
}

impl Character2 {
    pub fn is_in_kernel(&self, g: &Permutation) -> bool {
        self.kernel.contains(g)
    }

    pub fn value(&self, g: &Permutation) -> i8 {
        if self.is_in_kernel(g) {
            1
        } else {
            -1
        }
    }

    pub fn label(&self) -> String {
        self.values.iter().map(|&v| if v { '-' } else { '+' }).collect()
    }
}

/// Every nontrivial homomorphism `⟨gens⟩ → C₂`.
///
/// `linked` lists generator pairs known to be conjugate (for Coxeter
/// generators: odd `m_ij`), which must take equal values; it only prunes
/// the candidates, every survivor is still checked through its kernel.
pub fn index2_characters(degree: usize, gens: &[Permutation], linked: &[(usize, usize)]) -> Vec<Character2> {
    let r = gens.len();
    assert!(r < 32, "too many generators");
    let group_order = StabChain::new(degree, gens).order();
    let mut out = Vec::new();
    'assign: for mask in 1u32..(1 << r) {
        let values: Vec<bool> = (0..r).map(|i| mask >> i & 1 == 1).collect();
        for &(i, j) in linked {
            if values[i] != values[j] {
                continue 'assign;
            }
        }
        if let Some(ch) = check_assignment(degree, gens, &values, &group_order) {
            out.push(ch);
        }
    }
    out
}

fn check_assignment(degree: usize, gens: &[Permutation], values: &[bool], group_order: &BigUint) -> Option<Character2> {
    let a_idx = values.iter().position(|&v| v)?;
    let a = &gens[a_idx];
    let a_inv = a.inverse();
    let mut schreier = Vec::new();
    for (t, t_odd) in [(Permutation::identity(degree), false), (a.clone(), true)] {
        for (s, &s_odd) in gens.iter().zip(values) {
            let ts = t.compose(s);
            let g = if t_odd ^ s_odd { ts.compose(&a_inv) } else { ts };
            if !g.is_identity() {
                schreier.push(g);
            }
        }
    }
    let kernel = StabChain::new(degree, &schreier);
    if kernel.order() * 2u32 != *group_order {
        return None;
    }
    let consistent = gens.iter().zip(values).all(|(g, &v)| kernel.contains(g) != v);
    consistent.then(|| Character2 { values: values.to_vec(), kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        (0..n - 1).map(|i| Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap()).collect()
    }

    #[test]
    fn derived_of_sym4_is_alt4() {
        let d = derived_subgroup(4, &sym(4));
        assert_eq!(d.order_u64(), Some(12));
    }

    #[test]
    fn abelian_group_has_trivial_derived_subgroup() {
        let g = [Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()];
        assert!(derived_subgroup(4, &g).is_trivial());
    }

    #[test]
    fn sym_has_one_character() {
        let chars = index2_characters(5, &sym(5), &[]);
        assert_eq!(chars.len(), 1);
        assert_eq!(chars[0].kernel.order_u64(), Some(60));
        assert_eq!(chars[0].label(), "----");
    }

    #[test]
    fn klein_four_has_three_characters() {
        let a = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        assert_eq!(index2_characters(4, &[a, b], &[]).len(), 3);
    }
}
