use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group has more than {limit} elements")]
    SizeCap { limit: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("series did not stabilise within {0} steps")]
    SeriesDepth(usize),

    #[error("catalog line {line}: {msg}")]
    Catalog { line: usize, msg: String },

    #[error("zero denominator")]
    ZeroDenominator,
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}

impl Error {
    /// Process exit status for the command-line front-end: 3 for the size
    /// cap, 2 for everything caused by bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeCap { .. } => 3,
            _ => 2,
        }
    }
}
