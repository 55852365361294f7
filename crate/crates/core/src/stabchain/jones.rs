use serde::Serialize;

use super::{orbits, StabError};
use crate::perms::{format_plain, Permutation};

/// Proof that a primitive group contains the alternating group: a group
/// element whose only nontrivial cycle has length `m`, `2 ≤ m ≤ n − 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JonesEvidence {
    pub degree: usize,
    /// The word, e.g. `x^2 y^2`, whose `power`-th power is the cycle.
    pub word: String,
    pub power: u64,
    pub cycle: String,
    pub cycle_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum JonesVerdict {
    ContainsAlt(JonesEvidence),
    NoCertificate(String),
}

impl JonesVerdict {
    pub fn contains_alt(&self) -> bool {
        matches!(self, JonesVerdict::ContainsAlt(_))
    }
}

fn single_cycle_length(p: &Permutation) -> Option<usize> {
    let mut long = p.cycles().into_iter().filter(|c| c.len() > 1);
    let c = long.next()?;
    long.next().is_none().then_some(c.len())
}

fn format_word(letters: &[usize], labels: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let l = &labels[letters[i]];
        parts.push(if j - i == 1 { l.clone() } else { format!("{l}^{}", j - i) });
        i = j;
    }
    parts.join(" ")
}

/// Searches words of length up to `max_len` in the generators and their
/// inverses, and all their powers, for a short cycle.
pub fn jones_certificate(gens: &[Permutation], labels: &[&str], max_len: usize) -> Result<JonesVerdict, StabError> {
    let n = gens.first().map(Permutation::degree).unwrap_or(0);
    if n < 5 {
        return Err(StabError::Precondition(format!("degree {n} < 5")));
    }
    if !orbits::is_transitive(n, gens) {
        return Ok(JonesVerdict::NoCertificate("intransitive".into()));
    }
    if let Some(b) = orbits::nontrivial_block(n, gens) {
        let pts: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
        return Ok(JonesVerdict::NoCertificate(format!("imprimitive, block {{{}}}", pts.join(","))));
    }
    let mut letters: Vec<Permutation> = gens.to_vec();
    let mut names: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    for (g, l) in gens.iter().zip(labels) {
        if g.order() > 2 {
            letters.push(g.inverse());
            names.push(format!("{l}^-1"));
        }
    }
    let mut frontier: Vec<(Vec<usize>, Permutation)> = vec![(Vec::new(), Permutation::identity(n))];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, p) in &frontier {
            for (i, l) in letters.iter().enumerate() {
                let mut w2 = w.clone();
                w2.push(i);
                let q = p.compose(l);
                let o = q.order();
                for d in (1..o).filter(|d| o % d == 0) {
                    let r = q.pow(d as i64);
                    if let Some(m) = single_cycle_length(&r) {
                        if (2..=n - 3).contains(&m) {
                            return Ok(JonesVerdict::ContainsAlt(JonesEvidence {
                                degree: n,
                                word: format_word(&w2, &names),
                                power: d,
                                cycle: format_plain(&r),
                                cycle_length: m,
                            }));
                        }
                    }
                }
                next.push((w2, q));
            }
        }
        frontier = next;
    }
    Ok(JonesVerdict::NoCertificate(format!("no short cycle among words of length <= {max_len}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intransitive_has_no_certificate() {
        let t = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        let v = jones_certificate(&[t], &["a"], 3).unwrap();
        assert!(matches!(v, JonesVerdict::NoCertificate(ref s) if s == "intransitive"));
    }

    #[test]
    fn small_degree_is_rejected() {
        assert!(jones_certificate(&[Permutation::identity(4)], &["a"], 1).is_err());
    }

    #[test]
    fn sym5_from_transposition_and_cycle() {
        let a = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let v = jones_certificate(&[a, b], &["a", "b"], 2).unwrap();
        match v {
            JonesVerdict::ContainsAlt(e) => {
                assert_eq!(e.word, "a");
                assert_eq!(e.cycle_length, 2);
            }
            other => panic!("{other:?}"),
        }
    }
}
