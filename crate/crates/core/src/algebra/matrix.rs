use std::fmt;

use super::{AlgebraError, ExactScalar};

/// Dense square matrix over ℚ(√5). Values are immutable; every operation
/// returns a fresh matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(AlgebraError::Shape("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(AlgebraError::Shape(format!("row of length {} in a {dim}x{dim} matrix", row.len())));
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    /// Integer matrix, convenient for root-basis generators and tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, AlgebraError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| ExactScalar::from_int(v)).collect()).collect())
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ExactScalar::one())
    }

    pub fn scalar(dim: usize, s: ExactScalar) -> Self {
        let mut entries = vec![ExactScalar::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = s.clone();
        }
        Self { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![ExactScalar::zero(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactScalar]> {
        self.entries.chunks(self.dim)
    }

    fn check_dim(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ExactScalar::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs)?;
        Ok(Self { dim: self.dim, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs)?;
        Ok(Self { dim: self.dim, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Self { dim: n, entries }
    }

    /// `M·v` for a column vector.
    pub fn apply(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>, AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch(self.dim, v.len()));
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter().zip(v).fold(ExactScalar::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    /// Gauss–Jordan elimination over the field.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.dim;
        let mut a: Vec<Vec<ExactScalar>> = self.rows().map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<ExactScalar>> = Self::identity(n).rows().map(|r| r.to_vec()).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inverse()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] = &a[r][j] - &t;
                    let t = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - &t;
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.dim).fold(ExactScalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Coefficients of `det(λI − M)`, leading coefficient first.
    ///
    /// Faddeev–LeVerrier: `M_k = M·M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(M·M_k)/k`.
    pub fn char_poly(&self) -> Vec<ExactScalar> {
        let n = self.dim;
        let mut coeffs = vec![ExactScalar::one()];
        let mut mk = Self::zero(n);
        for k in 1..=n {
            let prev = coeffs.last().expect("non-empty").clone();
            mk = self.mul(&mk).expect("same dimension").add(&Self::scalar(n, prev)).expect("same dimension");
            let am = self.mul(&mk).expect("same dimension");
            let c = -(&am.trace() * &ExactScalar::from_int(k as i64).inverse().expect("k > 0"));
            coeffs.push(c);
        }
        coeffs
    }

    /// Horner evaluation of a polynomial (leading coefficient first) at this matrix.
    pub fn eval_poly(&self, coeffs: &[ExactScalar]) -> Self {
        let n = self.dim;
        coeffs.iter().fold(Self::zero(n), |acc, c| {
            acc.mul(self).expect("same dimension").add(&Self::scalar(n, c.clone())).expect("same dimension")
        })
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Least `m > 0` with `Mᵐ = I`, searched up to `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let id = Self::identity(self.dim);
        let mut p = self.clone();
        for m in 1..=bound {
            if p == id {
                return Some(m);
            }
            p = p.mul(self).expect("same dimension");
        }
        None
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from_int(v)
    }

    #[test]
    fn identity_is_neutral_and_self_inverse() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 5]]).unwrap();
        let i = ExactMatrix::identity(2);
        assert_eq!(i.mul(&m).unwrap(), m);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn dimension_mismatch() {
        let a = ExactMatrix::identity(2);
        let b = ExactMatrix::identity(3);
        assert!(matches!(a.mul(&b), Err(AlgebraError::DimensionMismatch(2, 3))));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[0, 0]]).unwrap();
        assert!(matches!(m.inverse(), Err(AlgebraError::Singular)));
    }

    #[test]
    fn char_poly_of_identity_and_minus_identity() {
        assert_eq!(ExactMatrix::identity(2).char_poly(), vec![s(1), s(-2), s(1)]);
        // (λ+1)^7 has binomial coefficients
        let m = ExactMatrix::scalar(7, s(-1));
        assert_eq!(m.char_poly(), [1, 7, 21, 35, 35, 21, 7, 1].iter().map(|&v| s(v)).collect::<Vec<_>>());
    }

    #[test]
    fn char_poly_of_three_cycle_plus_fixed_point() {
        // (λ³ − 1)(λ − 1) = λ⁴ − λ³ − λ + 1
        let m = ExactMatrix::from_int_rows(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]).unwrap();
        assert_eq!(m.char_poly(), vec![s(1), s(-1), s(0), s(-1), s(1)]);
        assert_eq!(m.eval_poly(&m.char_poly()), ExactMatrix::zero(4));
    }

    #[test]
    fn diagonal_detection() {
        assert!(ExactMatrix::identity(3).is_diagonal());
        let m = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(!m.is_diagonal());
    }

    #[test]
    fn order_of_a_reflection() {
        let m = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.order(10), Some(2));
        assert_eq!(m.pow(2), ExactMatrix::identity(2));
    }
}
