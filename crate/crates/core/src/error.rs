//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation precondition failed. `field` names the
    /// offending input.
    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },

    /// Observation point coincides with a source (or the array mean), so the
    /// 1/r terms are undefined.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// A direction that must be unit length is not.
    #[error("direction is not unit length: |n| = {norm:.3e}")]
    NonUnitDirection { norm: f64 },

    /// The retarded-time solver did not converge (e.g. superluminal
    /// trajectory).
    #[error("retarded-time solver failed: {0}")]
    SolverFailure(String),

    /// Inputs contradict each other (e.g. an array factor outside [0, N^2]).
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
