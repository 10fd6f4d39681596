//! Bias sketching and the threshold-predicate value estimator.
//!
//! Each constraint `(b, j, w)` turns into the `k` updates
//! `(j_t, (−1)^{b_t} w)`, so the sketched vector is exactly the signed bias
//! vector and `‖·‖₁ / (kW)` is the instance bias.

use streamcsp_analysis::{alpha_cached, gamma_mu};
use streamcsp_core::{Constraint, Exec, SymmetricPredicate};

use crate::error::{Result, SketchError};
use crate::l1::L1Sketch;

/// Failure probability of the underlying sketch.
pub const DEFAULT_CONFIDENCE: f64 = 0.1;
const FEED_CHUNKS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiasEstimator {
    sketch: L1Sketch,
    k: usize,
    total_weight: i64,
}

impl BiasEstimator {
    pub fn new(n: usize, k: usize, eps: f64, delta: f64, seed: u64) -> Result<Self> {
        if k == 0 {
            return Err(SketchError::Argument("arity must be positive".into()));
        }
        Ok(Self { sketch: L1Sketch::new(n, eps, delta, seed)?, k, total_weight: 0 })
    }

    pub fn sketch(&self) -> &L1Sketch {
        &self.sketch
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn total_weight(&self) -> i64 {
        self.total_weight
    }

    pub fn feed(&mut self, c: &Constraint) -> Result<()> {
        if c.k() != self.k {
            return Err(SketchError::Argument(format!("constraint arity {} != k = {}", c.k(), self.k)));
        }
        if c.w <= 0 {
            return Err(SketchError::Argument(format!("weight {} must be positive", c.w)));
        }
        let total = self.total_weight.checked_add(c.w).ok_or(SketchError::Overflow)?;
        for (t, &v) in c.j.iter().enumerate() {
            self.sketch.update(v, if c.b_bit(t) { -c.w } else { c.w })?;
        }
        self.total_weight = total;
        Ok(())
    }

    /// Feeds a batch, splitting it across workers and merging the partial
    /// sketches. The result is identical to feeding one by one.
    pub fn feed_all(&mut self, cs: &[Constraint], exec: Exec) -> Result<()> {
        let chunk = cs.len().div_ceil(FEED_CHUNKS).max(1);
        let chunks: Vec<&[Constraint]> = cs.chunks(chunk).collect();
        let empty = Self { sketch: self.sketch.zeroed(), k: self.k, total_weight: 0 };
        let parts = exec.map(&chunks, |part| {
            let mut e = empty.clone();
            part.iter().try_for_each(|c| e.feed(c)).map(|_| e)
        });
        for p in parts {
            self.merge_from(&p?)?;
        }
        Ok(())
    }

    pub fn merge_from(&mut self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(SketchError::Mismatch);
        }
        let total = self.total_weight.checked_add(other.total_weight).ok_or(SketchError::Overflow)?;
        self.sketch.merge_from(&other.sketch)?;
        self.total_weight = total;
        Ok(())
    }

    /// Estimated `‖bias‖₁/(kW)`, unclamped; zero for an empty stream.
    pub fn estimate(&self) -> f64 {
        if self.total_weight == 0 {
            return 0.0;
        }
        let scale = (self.k as u64).saturating_mul(self.total_weight as u64);
        self.sketch.estimate_over(scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueEstimate {
    pub value: f64,
    pub bias_hat: f64,
    pub alpha: f64,
    /// Relative accuracy asked of the sketch.
    pub delta: f64,
}

/// Streaming `α·γ_{S,k}(b̂/(1+δ))` for a threshold predicate.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueEstimator {
    f: SymmetricPredicate,
    alpha: f64,
    delta: f64,
    bias: BiasEstimator,
}

/// Largest `δ < 1` with `α(1−δ)/(1+δ) ≥ α − ε`.
pub fn accuracy_for(alpha: f64, eps: f64) -> f64 {
    let d = if 2.0 * alpha > eps { eps / (2.0 * alpha - eps) } else { 1.0 };
    d.min(0.5)
}

impl ValueEstimator {
    pub fn new(f: &SymmetricPredicate, n: usize, eps: f64, seed: u64) -> Result<Self> {
        Self::with_confidence(f, n, eps, DEFAULT_CONFIDENCE, seed)
    }

    pub fn with_confidence(f: &SymmetricPredicate, n: usize, eps: f64, confidence: f64, seed: u64) -> Result<Self> {
        if f.threshold_t().is_none() {
            return Err(SketchError::Argument(format!("{f} is not a threshold predicate")));
        }
        if !(eps > 0.0 && eps < 1.0) {
            return Err(SketchError::Argument(format!("need 0 < ε < 1, got {eps}")));
        }
        let alpha = alpha_cached(f).alpha;
        let delta = accuracy_for(alpha, eps);
        Ok(Self { f: f.clone(), alpha, delta, bias: BiasEstimator::new(n, f.k(), delta, confidence, seed)? })
    }

    pub fn bias(&self) -> &BiasEstimator {
        &self.bias
    }

    pub fn feed(&mut self, c: &Constraint) -> Result<()> {
        self.bias.feed(c)
    }

    pub fn feed_all(&mut self, cs: &[Constraint], exec: Exec) -> Result<()> {
        self.bias.feed_all(cs, exec)
    }

    pub fn merge_from(&mut self, other: &Self) -> Result<()> {
        if self.f != other.f || self.delta.to_bits() != other.delta.to_bits() {
            return Err(SketchError::Mismatch);
        }
        self.bias.merge_from(&other.bias)
    }

    pub fn finish(&self) -> Result<ValueEstimate> {
        let bias_hat = self.bias.estimate().clamp(0.0, 1.0);
        let value = self.alpha * gamma_mu(&self.f, bias_hat / (1.0 + self.delta))?;
        Ok(ValueEstimate { value, bias_hat, alpha: self.alpha, delta: self.delta })
    }
}

/// One-shot estimate over a constraint stream.
pub fn estimate_value<'a>(
    f: &SymmetricPredicate,
    n: usize,
    stream: impl IntoIterator<Item = &'a Constraint>,
    eps: f64,
    seed: u64,
) -> Result<ValueEstimate> {
    let mut est = ValueEstimator::new(f, n, eps, seed)?;
    for c in stream {
        est.feed(c)?;
    }
    est.finish()
}
