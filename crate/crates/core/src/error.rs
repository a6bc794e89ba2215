use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} of size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("prime {0} does not divide the group order")]
    PNotDividing(u64),

    #[error("subgroup is not proper")]
    NotProper,

    #[error("subgroup is not contained in the group")]
    NotSubgroup,

    #[error("candidate subgroups do not cover the group")]
    NoCover,

    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),

    #[error("prime {0} divides the order of the base group")]
    PDividesOrder(u64),

    #[error("element lies in the base group")]
    InBaseGroup,

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("the four coset conditions disagree: {0}")]
    EquivalenceViolation(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// Shifts the column of a parse error by `by` characters.
    pub(crate) fn offset(self, by: usize) -> Self {
        match self {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column: column + by,
                message,
            },
            other => other,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
