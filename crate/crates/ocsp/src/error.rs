use streamcsp_core::CspError;
use streamcsp_hardgen::HardgenError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OcspError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{what} with n = {n} exceeds the cap of {cap}")]
    Resource { what: &'static str, n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("instance has no constraints")]
    Empty,
    #[error(transparent)]
    Core(#[from] CspError),
    #[error(transparent)]
    Hardgen(#[from] HardgenError),
}

pub type Result<T> = std::result::Result<T, OcspError>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(OcspError::Argument(msg.into()))
}
