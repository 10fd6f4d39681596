use streamcsp_analysis::AnalysisError;
use streamcsp_core::CspError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SketchError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("sketch parameters differ, cannot merge")]
    Mismatch,
    #[error("weight overflow")]
    Overflow,
    #[error(transparent)]
    Core(#[from] CspError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

pub type Result<T> = std::result::Result<T, SketchError>;
