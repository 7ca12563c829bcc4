use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{0}: input is the zero polynomial")]
    ZeroInput(&'static str),
    #[error("ring is not bigraded")]
    NotBigraded,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("too many variables: {0} (at most {max})", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("resource limit exceeded: {what} (basis size {basis_size}, degree {degree})")]
    ResourceLimit {
        what: String,
        basis_size: usize,
        degree: u32,
    },
    #[error("wrong oracle: {0}")]
    WrongOracle(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error at line {line}, column {column} (offset {offset}): {message}")]
    Parse {
        line: usize,
        column: usize,
        offset: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn resource(what: impl Into<String>, basis_size: usize, degree: u32) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            basis_size,
            degree,
        }
    }
}
