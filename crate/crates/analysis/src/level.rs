use std::fmt;

use streamcsp_core::{to_f64, TemplateDistribution, Q};

use crate::error::{arg, Result};

/// Tolerance on `Σ D⟨i⟩ = 1`.
pub const MASS_TOL: f64 = 1e-12;

/// A symmetric distribution on `{0,1}^k`, stored as the masses on the
/// Hamming-weight levels `0..=k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelDistribution(Vec<f64>);

impl LevelDistribution {
    pub fn new(masses: Vec<f64>) -> Result<Self> {
        if masses.is_empty() {
            return arg("a level distribution needs at least one level");
        }
        if masses.iter().any(|m| !m.is_finite() || *m < 0.0) {
            return arg(format!("masses must be finite and non-negative: {masses:?}"));
        }
        let total: f64 = masses.iter().sum();
        if (total - 1.0).abs() > MASS_TOL {
            return arg(format!("masses sum to {total}, not 1"));
        }
        Ok(Self(masses))
    }

    /// Scales `masses` to sum to one.
    pub fn normalized(masses: Vec<f64>) -> Result<Self> {
        let total: f64 = masses.iter().sum();
        if total.is_nan() || total <= 0.0 {
            return arg("cannot normalize a zero vector");
        }
        Self::new(masses.into_iter().map(|m| m / total).collect())
    }

    pub fn point(k: usize, i: usize) -> Self {
        let mut m = vec![0.0; k + 1];
        m[i] = 1.0;
        Self(m)
    }

    /// `w·D_i + (1−w)·D_j`
    pub fn two_level(k: usize, i: usize, j: usize, w: f64) -> Self {
        let mut m = vec![0.0; k + 1];
        m[i] += w;
        m[j] += 1.0 - w;
        Self(m)
    }

    /// Convex combination `w·self + (1−w)·other`.
    pub fn mix(&self, other: &Self, w: f64) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| w * a + (1.0 - w) * b).collect())
    }

    /// The binomial level profile of the uniform distribution.
    pub fn uniform(k: usize) -> Self {
        let scale = 0.5f64.powi(k as i32);
        Self((0..=k).map(|i| streamcsp_core::binomial(k, i) as f64 * scale).collect())
    }

    /// Unchecked constructor for points produced by internal searches.
    pub(crate) fn from_raw(masses: Vec<f64>) -> Self {
        Self(masses)
    }

    pub fn k(&self) -> usize {
        self.0.len() - 1
    }

    pub fn masses(&self) -> &[f64] {
        &self.0
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

impl fmt::Display for LevelDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| format!("{m:.12}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ε_{i,k} = −1 + 2i/k`
pub fn epsilon(i: usize, k: usize) -> Result<Q> {
    if k == 0 || i > k {
        return arg(format!("level {i} outside 0..={k}"));
    }
    Ok(Q::new(2 * i as i128 - k as i128, k as i128))
}

#[inline]
pub fn epsilon_f(i: usize, k: usize) -> f64 {
    -1.0 + 2.0 * i as f64 / k as f64
}

/// Scalar marginal `μ(D) = Σ ε_{i,k} D⟨i⟩`.
pub fn mu(d: &LevelDistribution) -> f64 {
    let k = d.k();
    d.0.iter().enumerate().map(|(i, m)| epsilon_f(i, k) * m).sum()
}

/// Collapse a template onto Hamming-weight levels.
pub fn symmetrize(t: &TemplateDistribution) -> LevelDistribution {
    LevelDistribution(t.level_masses().iter().map(to_f64).collect())
}

/// Exact level masses of a template.
pub fn symmetrize_exact(t: &TemplateDistribution) -> Vec<Q> {
    t.level_masses()
}
