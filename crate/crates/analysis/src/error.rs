use streamcsp_core::CspError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Core(#[from] CspError),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(AnalysisError::Argument(msg.into()))
}
