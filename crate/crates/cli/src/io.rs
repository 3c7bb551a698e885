//! Reading input files, with diagnostics that name the file.

use std::fs;
use std::path::{Path, PathBuf};

use trop_core::{TropError, TropMatrix, TropVector};

use crate::harness::HarnessError;
use crate::instance::Instance;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Core(#[from] TropError),
    #[error("{0}")]
    Harness(#[from] HarnessError),
    #[error("{0}")]
    Usage(String),
}

fn located(path: &Path, e: TropError) -> CliError {
    match e {
        TropError::Parse {
            line,
            column,
            message,
        } => CliError::Parse {
            path: path.to_path_buf(),
            line,
            column,
            message,
        },
        other => CliError::Core(other),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_matrix(path: &Path) -> Result<TropMatrix, CliError> {
    read_text(path)?.parse().map_err(|e| located(path, e))
}

pub fn read_vector(path: &Path) -> Result<TropVector, CliError> {
    let m = read_matrix(path)?;
    m.to_vector().map_err(|e| match e {
        TropError::Shape(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
        other => CliError::Core(other),
    })
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    read_text(path)?.parse().map_err(|e| located(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
