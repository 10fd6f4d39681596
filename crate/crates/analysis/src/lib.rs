//! Approximability thresholds for symmetric Boolean predicates: the
//! template quantities `μ`, `λ_S`, `γ`, `β`, the max-min computation of `α`
//! with certification, padded one-wise pairs and matching counts.

pub mod alpha;
pub mod beta_mu;
pub mod combo;
pub mod error;
pub mod lambda;
pub mod level;
pub mod nm;
pub mod padded;
pub mod three_and;

pub use alpha::{
    alpha, alpha_cached, alpha_prime, alpha_with, certify_max_min, supports_one_wise, AlphaResult, Method,
};
pub use beta_mu::{beta_mu, BetaMu};
pub use combo::{edge_count, h_alpha};
pub use error::{AnalysisError, Result};
pub use lambda::{beta_dist, gamma_dist, gamma_mu, lambda, LambdaTable};
pub use level::{epsilon, mu, symmetrize, LevelDistribution};
pub use padded::{is_padded_onewise_pair, padded_decomposition, padded_pair_ratio};
pub use three_and::three_and_minimum_check;
