use crate::perms::Permutation;

/// Orbit of `start` under the group generated by `gens`.
pub fn orbit(degree: usize, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut out = vec![start];
    let mut k = 0;
    while k < out.len() {
        let b = out[k];
        for g in gens {
            let c = g.image(b);
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
        k += 1;
    }
    out
}

pub fn orbits(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if !seen[p] {
            let o = orbit(degree, gens, p);
            for &q in &o {
                seen[q] = true;
            }
            out.push(o);
        }
    }
    out
}

pub fn is_transitive(degree: usize, gens: &[Permutation]) -> bool {
    degree == 0 || orbit(degree, gens, 0).len() == degree
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

/// Finest block system in which `a` and `b` share a block; returns the
/// block containing `a`, sorted.
pub fn minimal_block(degree: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<usize> {
    let mut uf = UnionFind((0..degree).collect());
    let mut queue = vec![(a, b)];
    let (ra, rb) = (uf.find(a), uf.find(b));
    if ra != rb {
        uf.0[rb] = ra;
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (gx, gy) = (g.image(x), g.image(y));
            let (rx, ry) = (uf.find(gx), uf.find(gy));
            if rx != ry {
                uf.0[ry] = rx;
                queue.push((gx, gy));
            }
        }
    }
    let root = uf.find(a);
    (0..degree).filter(|&p| uf.find(p) == root).collect()
}

/// A nontrivial block containing point 0, if the (transitive) group has one.
pub fn nontrivial_block(degree: usize, gens: &[Permutation]) -> Option<Vec<usize>> {
    (1..degree).map(|b| minimal_block(degree, gens, 0, b)).find(|blk| blk.len() < degree)
}

/// Transitive with no nontrivial block system.
pub fn is_primitive(degree: usize, gens: &[Permutation]) -> bool {
    is_transitive(degree, gens) && (degree <= 2 || nontrivial_block(degree, gens).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cs: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cs.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn sym4_is_primitive() {
        let g = [p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])];
        assert!(is_transitive(4, &g));
        assert!(is_primitive(4, &g));
    }

    #[test]
    fn klein_four_is_imprimitive() {
        let g = [p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])];
        assert!(is_transitive(4, &g));
        assert!(!is_primitive(4, &g));
        assert_eq!(minimal_block(4, &g, 0, 1), vec![0, 1]);
    }

    #[test]
    fn trivial_group_on_two_points() {
        assert!(!is_transitive(2, &[Permutation::identity(2)]));
        assert_eq!(orbits(2, &[Permutation::identity(2)]).len(), 2);
    }
}
