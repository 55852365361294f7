use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::GroupError;

/// A finite irreducible Coxeter type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
}

impl CoxeterType {
    pub fn validate(self) -> Result<Self, GroupError> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::I2(k) => k >= 3,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(GroupError::InvalidType(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
        }
    }

    /// The classical order formula.
    pub fn order(self) -> BigUint {
        let fact = |n: usize| (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k));
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => fact(n) << n,
            CoxeterType::D(n) => fact(n) << (n - 1),
            CoxeterType::I2(k) => BigUint::from(2 * k),
            CoxeterType::E6 => BigUint::from(51_840u32),
            CoxeterType::E7 => BigUint::from(2_903_040u32),
            CoxeterType::E8 => BigUint::from(696_729_600u32),
            CoxeterType::F4 => BigUint::from(1152u32),
            CoxeterType::H3 => BigUint::from(120u32),
            CoxeterType::H4 => BigUint::from(14_400u32),
        }
    }

    /// Coxeter matrix `m_ij` in the generator order used by the constructors.
    pub fn coxeter_matrix(self) -> Vec<Vec<u64>> {
        let r = self.rank();
        let mut m = vec![vec![2u64; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut edge = |i: usize, j: usize, v: u64| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self {
            CoxeterType::A(n) => (0..n - 1).for_each(|i| edge(i, i + 1, 3)),
            CoxeterType::B(n) => {
                (0..n - 2).for_each(|i| edge(i, i + 1, 3));
                edge(n - 2, n - 1, 4);
            }
            CoxeterType::D(n) => {
                (0..n - 2).for_each(|i| edge(i, i + 1, 3));
                edge(n - 3, n - 1, 3);
            }
            CoxeterType::I2(k) => edge(0, 1, k as u64),
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                // Bourbaki labels: 1-3-4-5-..., with 2 attached to 4.
                edge(0, 2, 3);
                edge(1, 3, 3);
                for i in 2..r - 1 {
                    edge(i, i + 1, 3);
                }
            }
            CoxeterType::F4 => {
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
            }
            CoxeterType::H3 => {
                edge(0, 1, 3);
                edge(1, 2, 5);
            }
            CoxeterType::H4 => {
                edge(0, 1, 3);
                edge(1, 2, 3);
                edge(2, 3, 5);
            }
        }
        m
    }

    /// Generator pairs with odd `m_ij`; they are conjugate, so every
    /// character takes the same value on both.
    pub fn odd_links(self) -> Vec<(usize, usize)> {
        let m = self.coxeter_matrix();
        let r = self.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                if m[i][j] % 2 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Dimension of the abelianisation as an F₂-space.
    pub fn abelianisation_rank(self) -> usize {
        match self {
            CoxeterType::B(_) | CoxeterType::F4 => 2,
            CoxeterType::I2(k) if k % 2 == 0 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(k) => write!(f, "I2({k})"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || GroupError::InvalidType(s.to_string());
        let exact = match t {
            "E6" => Some(CoxeterType::E6),
            "E7" => Some(CoxeterType::E7),
            "E8" => Some(CoxeterType::E8),
            "F4" => Some(CoxeterType::F4),
            "H3" => Some(CoxeterType::H3),
            "H4" => Some(CoxeterType::H4),
            _ => None,
        };
        if let Some(c) = exact {
            return Ok(c);
        }
        if let Some(rest) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return CoxeterType::I2(rest.parse().map_err(|_| bad())?).validate();
        }
        let (head, num) = t.split_at(1.min(t.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        match head {
            "A" => CoxeterType::A(n),
            "B" => CoxeterType::B(n),
            "D" => CoxeterType::D(n),
            _ => return Err(bad()),
        }
        .validate()
    }
}

impl TryFrom<String> for CoxeterType {
    type Error = GroupError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<CoxeterType> for String {
    fn from(t: CoxeterType) -> String {
        t.to_string()
    }
}
