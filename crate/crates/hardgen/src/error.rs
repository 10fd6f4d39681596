use streamcsp_core::CspError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HardgenError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("search space q^n = {q}^{n} exceeds the cap of {cap}")]
    Resource { q: u32, n: usize, cap: u64 },
    #[error(transparent)]
    Core(#[from] CspError),
}

pub type Result<T> = std::result::Result<T, HardgenError>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(HardgenError::Argument(msg.into()))
}
