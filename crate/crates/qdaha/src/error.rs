//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent not representable: {0}")]
    Exponent(String),
    #[error("specialization hits a root of unity: {0}")]
    RootOfUnity(String),
    #[error("pole encountered: {0}")]
    Pole(String),
    #[error("value is not rational: {0}")]
    Irrational(String),
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("enumeration exceeds bound {0}")]
    TooLarge(usize),
    #[error("degenerate skew form: {0}")]
    DegenerateForm(String),
    #[error("window overflow at shift {0:?}")]
    WindowOverflow(Vec<i64>),
    #[error("pole of order at least two: {0}")]
    HigherOrderPole(String),
    #[error("input not in the supported class: {0}")]
    NotInClass(String),
    #[error("non-integral exponent: {0}")]
    NonIntegral(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
