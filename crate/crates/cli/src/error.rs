//! Errors of the command-line layer.  Every variant is an input error
//! (exit code 2); failed verifications are reported as data instead.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// A malformed document, located by line (when known) and field path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    /// Path of the offending field, e.g. `covers[2][1]`.
    pub field: Option<String>,
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            column: None,
            field: None,
            message: message.into(),
        }
    }

    pub fn at_field(mut self, field: impl Into<String>) -> Self {
        self.field = Some(field.into());
        self
    }

    pub fn at_line(mut self, line: Option<usize>) -> Self {
        self.line = line;
        self
    }

    /// Convert a `serde_json` error, keeping its position.
    pub fn from_json(e: &serde_json::Error) -> Self {
        let line = (e.line() > 0).then_some(e.line());
        let column = (e.column() > 0).then_some(e.column());
        // serde_json appends " at line L column C"; the position is kept
        // separately, so strip it from the message.
        let text = e.to_string();
        let message = match text.rfind(" at line ") {
            Some(i) => text[..i].to_string(),
            None => text,
        };
        ParseError {
            line,
            column,
            field: None,
            message,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("parse error")?;
        if let Some(line) = self.line {
            write!(f, " at line {line}")?;
            if let Some(column) = self.column {
                write!(f, ", column {column}")?;
            }
        }
        if let Some(field) = &self.field {
            write!(f, " in field `{field}`")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] latdual_core::Error),
    #[error("input is not a valid {what}:\n{report}")]
    Invalid { what: String, report: String },
    #[error(
        "size bound {requested} exceeds the default limit {limit}; pass --allow-large to override"
    )]
    BoundTooLarge { requested: usize, limit: usize },
    #[error("unsupported request: {0}")]
    Unsupported(String),
}

impl CliError {
    /// Every error is an input error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type CliResult<T> = Result<T, CliError>;
