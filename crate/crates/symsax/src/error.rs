//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by representation, distance, classification, and ingest
/// operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented bounds.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter {
        name: &'static str,
        message: String,
    },

    /// An input value or combination of inputs is not usable.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two symbolic words cannot be compared; names the mismatched field.
    #[error("incompatible words: {field} mismatch ({left} vs {right})")]
    IncompatibleWords {
        field: &'static str,
        left: String,
        right: String,
    },

    /// Two raw series cannot be compared.
    #[error("incompatible series: length {left_len} vs {right_len}")]
    IncompatibleSeries { left_len: usize, right_len: usize },

    /// A dataset file does not conform to the UCR text layout.
    #[error("format error in {path}: line {line}{}: {message}", column.map(|c| format!(", field {c}")).unwrap_or_default())]
    Format {
        path: PathBuf,
        /// 1-based line number.
        line: usize,
        /// 1-based field index, when the error is tied to a single field.
        column: Option<usize>,
        message: String,
    },

    /// Underlying I/O failure with the path that caused it.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A dataset could not be located; lists every path that was probed.
    #[error("dataset `{name}` not found; probed: {}", probed.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", "))]
    NotFound { name: String, probed: Vec<PathBuf> },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid_parameter(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}
