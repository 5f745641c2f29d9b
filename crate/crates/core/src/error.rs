use thiserror::Error;

/// Errors raised by the algebra, search and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected} qubits, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{what} exceeds capacity: {requested} > {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("generator {0} is not Hermitian")]
    NotHermitian(usize),

    /// Indices are 1-based, in input order.
    #[error("generators anticommute: ({0},{1})")]
    Anticommuting(usize, usize),

    #[error("generator check vectors are linearly dependent")]
    Dependent,

    #[error("invalid channel at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
