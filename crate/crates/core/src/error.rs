use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CspError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("instance has zero total weight")]
    Degenerate,
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    Resource { n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("weight overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, CspError>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(CspError::Argument(msg.into()))
}
