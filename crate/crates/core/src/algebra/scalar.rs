use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// An element `a + b·√5` of the quadratic field ℚ(√5).
///
/// Both parts are arbitrary-precision rationals kept in lowest terms by
/// `BigRational`, so equality is structural and exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `(a + b√5) / den` with integer parts.
    pub fn from_parts(a: i64, b: i64, den: i64) -> Self {
        let d = BigInt::from(den);
        Self {
            a: BigRational::new(BigInt::from(a), d.clone()),
            b: BigRational::new(BigInt::from(b), d),
        }
    }

    pub fn sqrt5() -> Self {
        Self { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(Self { a: c.a / &n, b: c.b / n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Sign of the real number `a + b√5`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a² against 5b²
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Rational value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|v| v.to_i64())
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return ExactScalar::rational(&self.a * &rhs.a);
        }
        let five = BigRational::from_integer(BigInt::from(5));
        ExactScalar {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> Self {
        ExactScalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt5", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt5", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_product_is_norm() {
        let x = ExactScalar::from_parts(1, 1, 1);
        let y = ExactScalar::from_parts(1, -1, 1);
        assert_eq!(&x * &y, ExactScalar::from_int(-4));
    }

    #[test]
    fn sqrt5_squared() {
        let r = ExactScalar::sqrt5();
        assert_eq!(&r * &r, ExactScalar::from_int(5));
    }

    #[test]
    fn quarter_golden_square() {
        // (−1/4 + √5/4)² = (1 − 2√5 + 5)/16 = 3/8 − √5/8
        let x = ExactScalar::from_parts(-1, 1, 4);
        assert_eq!(&x * &x, ExactScalar::from_parts(3, -1, 8));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = ExactScalar::one();
        assert!(matches!(one.checked_div(&ExactScalar::zero()), Err(AlgebraError::DivisionByZero)));
    }

    #[test]
    fn signum_of_mixed_terms() {
        assert_eq!(ExactScalar::from_parts(-2, 1, 1).signum(), Ordering::Greater); // √5 > 2
        assert_eq!(ExactScalar::from_parts(3, -1, 1).signum(), Ordering::Greater); // 3 > √5
        assert_eq!(ExactScalar::from_parts(2, -1, 1).signum(), Ordering::Less);
        assert_eq!(ExactScalar::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn inverse_round_trip() {
        let x = ExactScalar::from_parts(3, -7, 5);
        assert_eq!(&x * &x.inverse().unwrap(), ExactScalar::one());
    }
}
