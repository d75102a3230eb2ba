//! File format and JSON reports for the `ecarr` command-line tool.
//!
//! The computations live in `ecarr-core`; this crate reads arrangement
//! files, runs the requested computation and renders the result as JSON
//! (or DOT for Hasse diagrams).

pub mod format;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed arrangement file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] ecarr_core::Error),

    #[error("results disagree: {0}")]
    Mismatch(String),
}

impl CliError {
    /// 1 for disagreeing or inconsistent results, 2 for bad input, 3 when a
    /// resource budget is exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) | CliError::Core(ecarr_core::Error::Inconsistent(_)) => 1,
            CliError::Core(ecarr_core::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
