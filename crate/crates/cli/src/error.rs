use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<CliError>,
    },
    #[error("expected a {expected} file, found {found}")]
    Kind { expected: &'static str, found: &'static str },
    #[error("invalid {what}: {detail}")]
    Invalid { what: String, detail: String },
    #[error(transparent)]
    Library(#[from] doublelift::Error),
}

impl CliError {
    pub fn invalid(what: impl Into<String>, detail: impl Into<String>) -> Self {
        CliError::Invalid { what: what.into(), detail: detail.into() }
    }
}
