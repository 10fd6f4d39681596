//! Hard instance distributions for streaming CSPs, sampled from one-way
//! communication games on random hypermatchings, plus the small statistics
//! used to sanity-check them.

pub mod error;
pub mod games;
pub mod matching;
pub mod qary;
pub mod reductions;
pub mod rng;
pub mod stats;

pub use error::{HardgenError, Result};
pub use games::{bpd_sample, sbpd_prime_sample, sbpd_sample, sirsd_sample, GameSample, PlayerSample};
pub use matching::{random_hypermatching, Hypermatching};
pub use qary::{omega_b, QaryInstance, QaryPredicate};
pub use reductions::{
    planted_dicut_count, sbpd_prime_to_maxdicut, sbpd_to_maxcut, sirsd_to_csp, QaryGenerated, DICUT_B,
};
pub use rng::stream_rng;
pub use stats::{birthday_advantage, mc_h_alpha, tv_distance};
