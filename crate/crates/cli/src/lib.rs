//! Library side of the `tdg` binary: report rendering for each subcommand
//! and the acceptance checks run by `tdg selftest`.

pub mod commands;
pub mod criteria;
pub mod fixtures;
pub mod verify;

use std::path::PathBuf;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    VerificationFailed = 1,
    InputError = 2,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: tangle_core::Error },
    #[error(transparent)]
    Core(#[from] tangle_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered text of a subcommand and the status it exits with.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub status: Status,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, status: Status::Ok }
    }
}
