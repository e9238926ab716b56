//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building, measuring or loading data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A value could not be constructed because it would violate a type invariant
    /// (for instance an object set with fewer than two members).
    #[error("construction error: {0}")]
    Construction(String),

    /// The caller supplied inconsistent or malformed data.
    #[error("input error: {0}")]
    Input(String),

    /// A numeric argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Boundary values whose ordering contradicts the sign of the model slope.
    #[error("sign error: {0}")]
    Sign(String),

    /// A ranking expression is lexically or grammatically malformed.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// A ranking expression names an object that is not in the object set.
    #[error("unknown object `{token}` at byte {position}")]
    UnknownObject { token: String, position: usize },

    /// A ranking expression names the same object twice.
    #[error("duplicate object `{token}` at byte {position}")]
    DuplicateObject { token: String, position: usize },

    /// A ranking expression leaves some objects unranked.
    #[error("missing objects: {}", .absent.join(", "))]
    MissingObjects { absent: Vec<String> },

    /// An error located at a specific line of an input file.
    #[error("line {line}: {source}")]
    AtLine {
        line: u64,
        #[source]
        source: Box<Error>,
    },

    /// A dataset file contained no rater records.
    #[error("no records")]
    NoRecords,

    /// The file could not be read.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn at_line(self, line: u64) -> Self {
        match self {
            e @ Error::AtLine { .. } => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }

    /// The innermost error, with any line context removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            e => e,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
