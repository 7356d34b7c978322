use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("index set member {member} lies outside 1..={m}")]
    IndexOutOfRange { member: u32, m: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polynomials in {0} and {1} variables cannot be combined")]
    MixedVariables(usize, usize),
    #[error("coefficient overflow")]
    Overflow,
    #[error("schur expansion failed: {0}")]
    Expansion(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
