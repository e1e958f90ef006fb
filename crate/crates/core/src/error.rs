use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("coefficient rings do not match")]
    MixedModuli,
    #[error("generator tables are incompatible: {0}")]
    IncompatibleRings(String),
    #[error("series substitution needs a zero constant term (variable {0})")]
    NonzeroConstantTerm(String),
    #[error("leading coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("truncation order {have} is too small, need {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("window too large: {0}")]
    WindowTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
