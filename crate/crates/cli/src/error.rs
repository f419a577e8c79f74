//! CLI error taxonomy with stable exit codes.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed configuration document. Exit code 2.
    #[error("parse error: {0}")]
    Parse(String),

    /// Well-formed but invalid configuration. Exit code 3.
    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },

    /// Observation point coincides with a source. Exit code 4.
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    /// Filesystem failure. Exit code 5.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Anything else (solver failures, internal inconsistencies). Exit code 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Validation { field: field.into(), message: message.into() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// Documented, stable process exit codes.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation { .. } => 3,
            CliError::Degenerate(_) => 4,
            CliError::Io { .. } => 5,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<arraybeam::Error> for CliError {
    fn from(e: arraybeam::Error) -> Self {
        match e {
            arraybeam::Error::Validation { field, message } => {
                CliError::Validation { field, message }
            }
            arraybeam::Error::NonUnitDirection { norm } => CliError::Validation {
                field: "direction".into(),
                message: format!("not unit length (|n| = {norm:.3e})"),
            },
            arraybeam::Error::DegenerateGeometry(msg) => CliError::Degenerate(msg),
            arraybeam::Error::SolverFailure(msg) | arraybeam::Error::Inconsistent(msg) => {
                CliError::Internal(msg)
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
