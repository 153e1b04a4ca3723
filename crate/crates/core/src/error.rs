use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division left a nonzero remainder where exactness is guaranteed.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    /// The weight or rectangle sequence exceeds the level.
    #[error("level restriction violated: {what} has level {found} > {level}")]
    LevelViolation { what: String, found: i64, level: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal identity failed; always indicates a bug or a wrong index set.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
