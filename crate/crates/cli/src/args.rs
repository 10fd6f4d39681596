use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0xC5B5;

#[derive(Debug, Parser)]
#[command(
    name = "streamcsp",
    version,
    about = "Streaming approximation thresholds, estimators and hard instances for CSPs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximability threshold of a symmetric predicate.
    Alpha(PredicateArgs),
    /// λ, γ, β and μ of a distribution over Hamming weights.
    Analyze(AnalyzeArgs),
    /// Generate a hard instance with a planted assignment.
    Gen(GenArgs),
    /// Streaming value estimate from the bias sketch.
    Estimate(EstimateArgs),
    /// Bias-rounding assignment.
    Assign(AssignArgs),
    /// Exact optimum by enumeration.
    Solve(InputArgs),
    /// Exact ordering optimum by enumeration.
    Ordsolve(InputArgs),
    /// Run the acceptance battery.
    Repro(ReproArgs),
}

#[derive(Debug, Clone, Args)]
pub struct PredicateArgs {
    #[arg(long)]
    pub k: usize,
    /// Accepted Hamming weights, comma separated.
    #[arg(long = "S", value_delimiter = ',', required = true)]
    pub s: Vec<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub predicate: PredicateArgs,
    /// Masses on weights 0..=k, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dist: Vec<f64>,
    /// Bias for λ(D, p); the maximizer is reported either way.
    #[arg(long)]
    pub p: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Maxcut,
    Maxdicut,
    Csp,
    Ocsp,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    /// Number of players.
    #[arg(long = "T", default_value_t = 50)]
    pub t: usize,
    /// Edges per player matching.
    #[arg(long = "alpha-n")]
    pub alpha_n: usize,
    #[arg(long, value_parser = parse_case, default_value = "yes")]
    pub case: streamcsp_core::Case,
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Arity for `csp`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Accepted weights for `csp`.
    #[arg(long = "S", value_delimiter = ',')]
    pub s: Option<Vec<usize>>,
    /// Base pattern: bits for `csp`, comma separated digits for `ocsp`.
    #[arg(long)]
    pub b: Option<String>,
    /// Alphabet size; `csp` requires 2.
    #[arg(long)]
    pub q: Option<u32>,
    /// Ordering predicate for `ocsp`: mas, btwn or a list like 123,321.
    #[arg(long, default_value = "mas")]
    pub pred: String,
}

#[derive(Debug, Clone, Args)]
pub struct EstimateArgs {
    /// Instance file; stdin when absent or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    /// Failure probability of the sketch.
    #[arg(long, default_value_t = streamcsp_sketch::DEFAULT_CONFIDENCE)]
    pub delta: f64,
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Headerless stream mode: number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long = "S", value_delimiter = ',')]
    pub s: Option<Vec<usize>>,
    /// Stream mode: stop after this many constraints.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AssignArgs {
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ReproArgs {
    /// Run only these criteria, e.g. A1,A7.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

/// Decimal or `0x` hexadecimal.
pub fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("bad seed {s:?}: {e}"))
}

fn parse_case(s: &str) -> Result<streamcsp_core::Case, String> {
    s.parse().map_err(|e: streamcsp_core::CspError| e.to_string())
}
