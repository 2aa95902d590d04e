use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The input word itself is unusable (empty, non-ASCII, too many symbols).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numeric argument (order, length, exponent) is out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation does not apply to this value, e.g. the cyclomatic
    /// number of a disconnected graph.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A hypothesis of a checked statement does not hold for the instance.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("circuit enumeration exceeded the cap of {cap} circuits")]
    CircuitCapExceeded { cap: usize },

    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
