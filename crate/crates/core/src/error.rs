use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands do not fit together (arity, flavor, space or field mismatch).
    #[error("argument error: {0}")]
    Argument(String),

    /// A structural precondition failed (parity constraint, degenerate form,
    /// non-invariant inner product, ...).
    #[error("validation error: {0}")]
    Validation(String),

    #[error("invalid field: {0}")]
    Field(String),

    #[error(transparent)]
    Parse(#[from] crate::cli::format::Diagnostic),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
