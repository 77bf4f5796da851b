//! Crate-wide error type and exit-code mapping.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    #[error("invalid parameter {name}: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("{op} needs a batch of at least {min} rows, got {got}")]
    BatchTooSmall {
        op: &'static str,
        min: usize,
        got: usize,
    },

    #[error("contract violation in {op}: {message}")]
    Contract { op: &'static str, message: String },

    #[error("missing {task} labels")]
    MissingLabels { task: &'static str },

    #[error("numeric error in {op}: {message}")]
    Numeric { op: String, message: String },

    #[error("data error: {0}")]
    Data(String),

    #[error("bad magic bytes: expected {expected:?}")]
    BadMagic { expected: &'static str },

    #[error("unsupported format version {found} (expected {expected})")]
    VersionMismatch { found: u16, expected: u16 },

    #[error("truncated file: {0}")]
    Truncated(String),

    #[error("corrupt file: {0}")]
    Corrupt(String),

    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("cannot open {path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 usage, 3 data, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } | Error::Usage(_) | Error::InvalidParameter { .. } => 2,
            Error::Data(_)
            | Error::BadMagic { .. }
            | Error::VersionMismatch { .. }
            | Error::Truncated(_)
            | Error::Corrupt(_)
            | Error::File { .. }
            | Error::Io(_)
            | Error::MissingLabels { .. } => 3,
            Error::ShapeMismatch { .. }
            | Error::BatchTooSmall { .. }
            | Error::Contract { .. }
            | Error::Numeric { .. } => 4,
        }
    }
}
