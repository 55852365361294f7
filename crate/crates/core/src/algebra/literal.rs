use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, ExactMatrix, ExactScalar};

/// Serialized matrix: `{"dim": n, "den": d, "entries": [[[a, b], ...], ...]}`
/// meaning entry `(a + b√5) / d`.
///
/// The literal keeps the exact integers it was read with, so writing it back
/// reproduces the input byte for byte (modulo JSON whitespace).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixLiteral {
    pub dim: usize,
    pub den: i64,
    pub entries: Vec<Vec<[i64; 2]>>,
}

impl MatrixLiteral {
    pub fn to_matrix(&self) -> Result<ExactMatrix, AlgebraError> {
        if self.den <= 0 {
            return Err(AlgebraError::Literal(format!("denominator must be positive, got {}", self.den)));
        }
        if self.entries.len() != self.dim || self.entries.iter().any(|r| r.len() != self.dim) {
            return Err(AlgebraError::Literal(format!("entries do not form a {0}x{0} array", self.dim)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&[a, b]| ExactScalar::from_parts(a, b, self.den)).collect())
            .collect();
        ExactMatrix::from_rows(rows)
    }

    /// Literal with the least common denominator of all entries.
    pub fn from_matrix(m: &ExactMatrix) -> Result<Self, AlgebraError> {
        let mut den = BigInt::one();
        for row in m.rows() {
            for e in row {
                den = den.lcm(e.rational_part().denom());
                den = den.lcm(e.sqrt5_part().denom());
            }
        }
        let scale = |q: &BigRational| -> Result<i64, AlgebraError> {
            let v = q * BigRational::from_integer(den.clone());
            debug_assert!(v.is_integer());
            v.to_integer().to_i64().ok_or_else(|| AlgebraError::Literal("entry exceeds i64".into()))
        };
        let entries = m
            .rows()
            .map(|r| r.iter().map(|e| Ok([scale(e.rational_part())?, scale(e.sqrt5_part())?])).collect())
            .collect::<Result<Vec<Vec<[i64; 2]>>, AlgebraError>>()?;
        let den = den.to_i64().ok_or_else(|| AlgebraError::Literal("denominator exceeds i64".into()))?;
        Ok(Self { dim: m.dim(), den, entries })
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|[a, b]| b.is_zero() && (a % self.den).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip_is_bit_exact() {
        let text = r#"{"dim":2,"den":4,"entries":[[[-1,1],[0,0]],[[2,0],[-1,-1]]]}"#;
        let lit: MatrixLiteral = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&lit).unwrap(), text);
        let m = lit.to_matrix().unwrap();
        assert_eq!(*m.get(1, 0), ExactScalar::from_parts(1, 0, 2));
    }

    #[test]
    fn canonical_literal_uses_least_denominator() {
        let lit = MatrixLiteral { dim: 1, den: 6, entries: vec![vec![[3, 0]]] };
        let back = MatrixLiteral::from_matrix(&lit.to_matrix().unwrap()).unwrap();
        assert_eq!(back.den, 2);
        assert_eq!(back.to_matrix().unwrap(), lit.to_matrix().unwrap());
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let lit = MatrixLiteral { dim: 2, den: 1, entries: vec![vec![[1, 0]]] };
        assert!(lit.to_matrix().is_err());
        let lit = MatrixLiteral { dim: 1, den: 0, entries: vec![vec![[1, 0]]] };
        assert!(lit.to_matrix().is_err());
    }
}
