use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::format::ParseError;

/// Everything a command can fail with, mapped onto process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] artin_randlab_core::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{failed} check(s) failed")]
    Verification { failed: usize },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::Parse(_) | CliError::Usage(_) => 1,
            CliError::Verification { .. } => 2,
            CliError::Io { .. } => 3,
        }
    }
}
