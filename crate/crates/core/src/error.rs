use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("saturation did not stabilize after {0} quotient steps")]
    SaturationLimit(usize),
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("unsupported arrangement: {0}")]
    Unsupported(String),
    #[error("lambda out of range: {0}")]
    LambdaRange(String),
    #[error("no valuation oracle for Case C")]
    NoCaseCOracle,
    #[error("envelope chain did not stabilize by degree {0}")]
    NoStabilization(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
