use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("index {index} out of range for n={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index {index} out of range for n={n} (offset {offset})")]
    IndexAt {
        offset: usize,
        index: usize,
        n: usize,
    },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid connector: {0}")]
    InvalidConnector(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("limit exceeded: n={n} is above the configured maximum {max}")]
    LimitExceeded { n: usize, max: usize },
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }
}
