use std::fmt::Display;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cannot read {path}: {message}")]
    Input { path: String, message: String },
    #[error("numerical failure: {0}")]
    Numerical(#[from] sigma_geom::Error),
    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
    #[error("expectation not met: {0}")]
    Expectation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Expectation(_) => 1,
            CliError::Config(_) | CliError::Input { .. } => 2,
            CliError::Numerical(_) | CliError::Output { .. } => 3,
        }
    }

    pub fn input(path: &Path, e: impl Display) -> Self {
        CliError::Input {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }

    pub fn output(path: &Path, e: impl Display) -> Self {
        CliError::Output {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }
}

/// Errors from building inputs out of user-supplied values are
/// configuration errors, not numerical ones.
pub fn config(e: sigma_geom::Error) -> CliError {
    CliError::Config(e.to_string())
}
