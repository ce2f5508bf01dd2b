use thiserror::Error;

use crate::cyclo::CycField;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(CycField, CycField),
    #[error("invalid conductor {0}: expected 1 or a prime up to {max}", max = crate::cyclo::MAX_CONDUCTOR)]
    InvalidConductor(u64),
    #[error("invalid Galois exponent {exponent} for {field}")]
    InvalidGaloisExponent { field: CycField, exponent: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("expected an ordinary polynomial (no negative powers of t)")]
    NotOrdinary,
    #[error("element does not have integral coordinates")]
    NotIntegral,
    #[error("polynomial has non-rational coefficients")]
    NotRational,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not divisible exactly")]
    InexactDivision,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("unknown bundled polynomial `{0}`")]
    UnknownName(String),
    #[error("internal failure: {0}")]
    Internal(String),
}
