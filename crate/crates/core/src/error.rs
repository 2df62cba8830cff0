use thiserror::Error;

/// Errors raised by braid, matrix and braid-system operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid degree {0}: a braid needs at least one strand")]
    InvalidDegree(usize),

    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("braid system must have at least one component")]
    EmptySystem,

    #[error("move index {index} out of range for a system of length {length}")]
    IndexOutOfRange { index: usize, length: usize },

    #[error("hurwitz word acts on {word_degree} entries but the system has length {length}")]
    LengthMismatch { word_degree: usize, length: usize },

    #[error("cannot destabilize: {0}")]
    Destabilize(String),

    #[error("invalid euler fission: {0}")]
    Fission(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("script step {step} `{command}`: {reason}")]
    Script {
        step: usize,
        command: String,
        reason: String,
    },

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
