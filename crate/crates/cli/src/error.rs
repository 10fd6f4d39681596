use streamcsp_analysis::AnalysisError;
use streamcsp_assign::AssignError;
use streamcsp_core::CspError;
use streamcsp_hardgen::HardgenError;
use streamcsp_ocsp::OcspError;
use streamcsp_sketch::SketchError;
use thiserror::Error;

pub const EX_USAGE: i32 = 64;
pub const EX_DATAERR: i32 = 65;
pub const EX_NOINPUT: i32 = 66;
pub const EX_UNAVAILABLE: i32 = 69;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("bad input: {0}")]
    Data(String),
    #[error("cannot read {path}: {source}")]
    Input { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
    #[error("too large: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EX_USAGE,
            CliError::Data(_) => EX_DATAERR,
            CliError::Input { .. } => EX_NOINPUT,
            CliError::Output { .. } => 73,
            CliError::Resource(_) => EX_UNAVAILABLE,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

impl From<CspError> for CliError {
    fn from(e: CspError) -> Self {
        let msg = e.to_string();
        match e {
            CspError::Argument(_) => CliError::Usage(msg),
            CspError::Resource { .. } => CliError::Resource(msg),
            CspError::Parse { .. } | CspError::Degenerate | CspError::Overflow => CliError::Data(msg),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Argument(m) => CliError::Usage(m),
            AnalysisError::Core(e) => e.into(),
        }
    }
}

impl From<SketchError> for CliError {
    fn from(e: SketchError) -> Self {
        match e {
            SketchError::Argument(m) => CliError::Usage(m),
            SketchError::Mismatch => CliError::Usage(e.to_string()),
            SketchError::Overflow => CliError::Data(e.to_string()),
            SketchError::Core(e) => e.into(),
            SketchError::Analysis(e) => e.into(),
        }
    }
}

impl From<AssignError> for CliError {
    fn from(e: AssignError) -> Self {
        match e {
            AssignError::Argument(m) => CliError::Usage(m),
            AssignError::Core(e) => e.into(),
            AssignError::Analysis(e) => e.into(),
        }
    }
}

impl From<HardgenError> for CliError {
    fn from(e: HardgenError) -> Self {
        match e {
            HardgenError::Argument(m) => CliError::Usage(m),
            HardgenError::Resource { .. } => CliError::Resource(e.to_string()),
            HardgenError::Core(e) => e.into(),
        }
    }
}

impl From<OcspError> for CliError {
    fn from(e: OcspError) -> Self {
        let msg = e.to_string();
        match e {
            OcspError::Argument(_) => CliError::Usage(msg),
            OcspError::Resource { .. } => CliError::Resource(msg),
            OcspError::Parse { .. } | OcspError::Empty => CliError::Data(msg),
            OcspError::Core(e) => e.into(),
            OcspError::Hardgen(e) => e.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes() {
        assert_eq!(CliError::from(CspError::Parse { line: 3, msg: "x".into() }).exit_code(), 65);
        assert_eq!(CliError::from(CspError::Resource { n: 40, cap: 24 }).exit_code(), 69);
        assert_eq!(CliError::from(CspError::Argument("k".into())).exit_code(), 64);
        let e = OcspError::Hardgen(HardgenError::Resource { q: 8, n: 12, cap: 1 << 24 });
        assert_eq!(CliError::from(e).exit_code(), 69);
    }
}
