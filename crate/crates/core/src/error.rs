use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QmodError {
    #[error("rewriting did not terminate within {budget} steps (last word: {word})")]
    NonTerminating { budget: u64, word: String },
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, QmodError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(QmodError::Domain(msg.into()))
}
