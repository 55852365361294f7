use std::fmt;

use num_integer::Integer;

use super::PermError;

/// A permutation of `{0, .., n-1}` stored as its image table.
///
/// Products follow one rule everywhere in the crate: `p.compose(q)` applies
/// `p` first and then `q`, so `i^(pq) = (i^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u16::MAX as usize, "degree {n} too large");
        Self { images: (0..n as u16).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(PermError::Malformed(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(PermError::OutOfRange { point: i + 1, degree: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(PermError::Duplicate(i + 1));
            }
        }
        Ok(Self { images: images.into_iter().map(|i| i as u16).collect() })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Box<[u16]>) -> Self {
        debug_assert!({
            let mut s: Vec<u16> = images.to_vec();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Self { images }
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut p = Self::identity(n);
        for c in cycles {
            let mut imgs: Vec<usize> = (0..n).collect();
            for (k, &a) in c.iter().enumerate() {
                if a >= n {
                    return Err(PermError::OutOfRange { point: a + 1, degree: n });
                }
                imgs[a] = c[(k + 1) % c.len()];
            }
            p = p.compose(&Self::from_images(imgs)?);
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn checked_compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Self { images: inv }
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

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }

    /// Cycles (including fixed points), each starting at its least point,
    /// ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut c = vec![i];
            seen[i] = true;
            let mut j = self.image(i);
            while j != i {
                seen[j] = true;
                c.push(j);
                j = self.image(j);
            }
            out.push(c);
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &v)| *i != v as usize).count()
    }

    /// Disjoint union: `self` on the first block, `other` shifted after it.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.degree();
        let images = self.images.iter().copied().chain(other.images.iter().map(|&v| v + n as u16)).collect();
        Self { images }
    }

    /// Restriction to the block `[lo, lo+len)`, which must be invariant.
    pub fn restrict(&self, lo: usize, len: usize) -> Option<Self> {
        let mut imgs = Vec::with_capacity(len);
        for i in lo..lo + len {
            let v = self.image(i);
            if v < lo || v >= lo + len {
                return None;
            }
            imgs.push(v - lo);
        }
        Self::from_images(imgs).ok()
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, fixed points omitted; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_left_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).image(0), 2);
    }

    #[test]
    fn order_and_inverse() {
        let p = Permutation::from_cycles(7, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.pow(6), Permutation::identity(7));
        assert_eq!(p.pow(-1), p.inverse());
        assert!(!p.is_even());
    }

    #[test]
    fn bad_images() {
        assert!(matches!(Permutation::from_images(vec![0, 0]), Err(PermError::Duplicate(1))));
        assert!(matches!(Permutation::from_images(vec![2, 0]), Err(PermError::OutOfRange { .. })));
    }

    #[test]
    fn direct_sum_and_restrict() {
        let a = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.order(), 6);
        assert_eq!(s.restrict(2, 3).unwrap(), b);
        assert_eq!(s.restrict(0, 2).unwrap(), a);
        assert!(s.restrict(1, 2).is_none());
    }
}
