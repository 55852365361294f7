//! Exact arithmetic over ℚ and ℚ(√5).

mod literal;
mod matrix;
mod scalar;

pub use literal::MatrixLiteral;
pub use matrix::ExactMatrix;
pub use scalar::ExactScalar;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error("bad matrix literal: {0}")]
    Literal(String),
}
