//! Error type shared across the crate.

use std::fmt;
use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Coarse error class, used by front ends to map errors to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Caller passed an invalid argument or configuration.
    Argument,
    /// Input data could not be read or parsed.
    Data,
    /// A computation hit a numerically degenerate case.
    Numeric,
}

#[derive(Debug)]
pub enum Error {
    /// Invalid argument (bad flag value, shape mismatch, bad grid).
    InvalidArgument(String),
    /// File could not be read.
    Io { path: PathBuf, source: std::io::Error },
    /// CSV structure problem (ragged rows, encoding, ...).
    Csv { path: PathBuf, message: String },
    /// A named column is missing from the input file.
    MissingColumn { column: String },
    /// A cell failed to parse as a finite real number.
    BadCell { row: usize, column: String, value: String },
    /// A covariate column is constant (or identically zero).
    ConstantColumn { column: String },
    /// Numerically degenerate state (zero grid head, vanishing residual,
    /// singular system, impossible calibration target, ...).
    Degenerate(String),
    /// Too many replications failed inside the simulation engine.
    Simulation { failures: usize, reps: usize, first: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidArgument(_) => ErrorKind::Argument,
            Error::Io { .. }
            | Error::Csv { .. }
            | Error::MissingColumn { .. }
            | Error::BadCell { .. }
            | Error::ConstantColumn { .. } => ErrorKind::Data,
            Error::Degenerate(_) | Error::Simulation { .. } => ErrorKind::Numeric,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Io { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            Error::Csv { path, message } => write!(f, "malformed CSV {}: {message}", path.display()),
            Error::MissingColumn { column } => write!(f, "column '{column}' not found in header"),
            Error::BadCell { row, column, value } => write!(
                f,
                "cell at data row {row}, column '{column}' is not a finite number: '{value}'"
            ),
            Error::ConstantColumn { column } => {
                write!(f, "covariate column '{column}' is constant")
            }
            Error::Degenerate(msg) => write!(f, "degenerate computation: {msg}"),
            Error::Simulation { failures, reps, first } => write!(
                f,
                "{failures} of {reps} replications failed (first failure: {first})"
            ),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}
