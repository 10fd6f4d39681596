//! Streaming estimation of CSP values from the bias vector: a linear,
//! mergeable median-of-Cauchy `ℓ₁` sketch and the estimator built on it.

pub mod error;
pub mod estimator;
pub mod l1;

pub use error::{Result, SketchError};
pub use estimator::{accuracy_for, estimate_value, BiasEstimator, ValueEstimate, ValueEstimator, DEFAULT_CONFIDENCE};
pub use l1::{repetitions, L1Sketch};
