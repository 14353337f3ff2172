use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a unit in the coefficient ring")]
    NonUnit(String),
    #[error("{0} is not prime")]
    BadPrime(u64),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("context has no unit v; s-elements are unavailable")]
    MissingUnit,
    #[error("right multiplication is not well defined: {0}")]
    NotWellDefined(String),
    #[error("a is not invertible")]
    NonInvertibleA,
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("label set is not closed under the differential: {0}")]
    NotClosed(String),
    #[error("complex does not carry induced-module structure")]
    NotInducedComplex,
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("dimension budget exceeded at stage {stage}: dimension {dim} > {budget}")]
    DimensionBudgetExceeded { stage: usize, dim: usize, budget: usize },
    #[error("operation requires a field")]
    NotAField,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::IndexOutOfRange { .. } | Error::SizeMismatch(_) => 1,
            Error::InvariantViolation(_) | Error::NotWellDefined(_) | Error::NotClosed(_) => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
