//! Errors reported by the front-end.

use std::fmt;

use mstt_core::tcm::TypeError;

/// A one-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {pos}: {message}")]
    Parse { pos: Pos, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("in def {name}: {error}")]
    Type { name: String, error: TypeError },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(pos: Pos, message: impl Into<String>) -> Self {
        CliError::Parse { pos, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }
}
