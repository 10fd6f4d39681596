//! Boolean CSPs over symmetric predicates: the data model, exact rational
//! evaluation, exhaustive optimization, template distributions and biases.
//!
//! Every other crate in the workspace is tested against the oracles here.

pub mod bias;
pub mod error;
pub mod exec;
pub mod format;
pub mod instance;
pub mod poly;
pub mod predicate;
pub mod rational;
pub mod solve;
pub mod template;

pub use bias::{bias_total, bias_var, bias_vector, majority_assignment, signed_bias};
pub use error::{CspError, Result};
pub use exec::Exec;
pub use format::{Case, Document, Planted};
pub use instance::{Assignment, Constraint, Instance};
pub use predicate::SymmetricPredicate;
pub use rational::{binomial, to_f64, Q};
pub use solve::{opt_value, opt_value_sequential, opt_value_with, Optimum};
pub use template::TemplateDistribution;
