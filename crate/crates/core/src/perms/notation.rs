//! Underline cycle notation, ASCII form.
//!
//! ```text
//! expr  := cycle*
//! cycle := '(' point (',' point)* ')'
//! point := '_'? integer
//! ```
//!
//! Whitespace is ignored. A leading `_` marks the column carrying −1, so
//! `(1,_2,3)(_5)` sends e₂ to −e₃ and e₅ to −e₅. Points are 1-based and the
//! degree is always given by the caller.

use super::{PermError, Permutation, SignedPermutation};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), PermError> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.err(format!("expected '{}', found '{}'", c as char, b as char))),
            None => Err(self.err(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn err(&self, msg: String) -> PermError {
        PermError::Malformed(format!("at byte {}: {msg}", self.pos))
    }

    fn point(&mut self) -> Result<(usize, bool), PermError> {
        let neg = if self.peek() == Some(b'_') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a point".into()));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let v: usize = text.parse().map_err(|_| self.err(format!("point {text} too large")))?;
        Ok((v, neg))
    }
}

/// Cycles as 1-based points with underline flags.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<(usize, bool)>>, PermError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut cycles = Vec::new();
    while cur.peek().is_some() {
        cur.expect(b'(')?;
        let mut c = vec![cur.point()?];
        while cur.peek() == Some(b',') {
            cur.pos += 1;
            c.push(cur.point()?);
        }
        cur.expect(b')')?;
        cycles.push(c);
    }
    Ok(cycles)
}

pub fn parse_signed(text: &str, degree: usize) -> Result<SignedPermutation, PermError> {
    let cycles = parse_cycles(text)?;
    let mut images: Vec<usize> = (0..degree).collect();
    let mut signs = vec![false; degree];
    let mut used = vec![false; degree];
    for c in &cycles {
        for &(v, neg) in c {
            if v == 0 || v > degree {
                return Err(PermError::OutOfRange { point: v, degree });
            }
            if std::mem::replace(&mut used[v - 1], true) {
                return Err(PermError::Duplicate(v));
            }
            signs[v - 1] = neg;
        }
        for k in 0..c.len() {
            images[c[k].0 - 1] = c[(k + 1) % c.len()].0 - 1;
        }
    }
    SignedPermutation::new(Permutation::from_images(images)?, signs)
}

/// Plain permutation; underlines are rejected.
pub fn parse_plain(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let p = parse_signed(text, degree)?;
    if p.negative_count() > 0 {
        return Err(PermError::Malformed(format!("unexpected sign in plain permutation {text:?}")));
    }
    Ok(p.perm().clone())
}

/// Canonical form: cycles start at their least point and are ordered by it;
/// unsigned fixed points are omitted, signed ones print as `(_k)`.
pub fn format_signed(p: &SignedPermutation) -> String {
    let mut out = String::new();
    for (c, _) in p.signed_cycles() {
        if c.len() == 1 && !p.signs()[c[0]] {
            continue;
        }
        out.push('(');
        for (k, &j) in c.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            if p.signs()[j] {
                out.push('_');
            }
            out.push_str(&(j + 1).to_string());
        }
        out.push(')');
    }
    out
}

pub fn format_plain(p: &Permutation) -> String {
    format_signed(&SignedPermutation::from_perm(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_identity() {
        assert!(parse_signed("", 4).unwrap().is_identity());
        assert!(parse_signed("  ", 4).unwrap().is_identity());
        assert_eq!(format_signed(&SignedPermutation::identity(3)), "");
    }

    #[test]
    fn example_round_trips() {
        let p = parse_signed("(1,_2,3)(_5)", 5).unwrap();
        assert_eq!(format_signed(&p), "(1,_2,3)(_5)");
        let q = parse_signed(" ( 3 , 1, _2 ) (_5)", 5).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn d4_membership_by_parity() {
        assert!(parse_signed("(1,2)(_3)(_4)", 4).unwrap().is_even_signed());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_signed("(1,2", 3), Err(PermError::Malformed(_))));
        assert!(matches!(parse_signed("(1,,2)", 3), Err(PermError::Malformed(_))));
        assert!(matches!(parse_signed("(1,4)", 3), Err(PermError::OutOfRange { point: 4, degree: 3 })));
        assert!(matches!(parse_signed("(0)", 3), Err(PermError::OutOfRange { .. })));
        assert!(matches!(parse_signed("(1,2)(2,3)", 3), Err(PermError::Duplicate(2))));
        assert!(matches!(parse_signed("1,2", 3), Err(PermError::Malformed(_))));
        assert!(parse_plain("(_1,2)", 2).is_err());
    }
}
