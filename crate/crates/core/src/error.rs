use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{family}: n = {n} outside supported range 1..={limit}")]
    Limit {
        family: String,
        n: usize,
        limit: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected a functional of kind {expected}, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("incompatible functionals: {0}")]
    Mismatch(String),
    #[error("functional is not unital (value at the empty monomial is {0})")]
    NonUnital(String),
    #[error("missing value for word {0:?}")]
    MissingValue(String),
    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeOverflow { degree: usize, truncation: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Limit { .. } => "limit",
            Error::Domain(_) => "domain",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::WrongKind { .. } => "wrong_kind",
            Error::Mismatch(_) => "mismatch",
            Error::NonUnital(_) => "non_unital",
            Error::MissingValue(_) => "missing_value",
            Error::DegreeOverflow { .. } => "degree_overflow",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::MalformedWord(_) => "malformed_word",
            Error::Parse(_) => "parse",
            Error::UnknownSuite(_) => "unknown_suite",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
