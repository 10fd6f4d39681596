//! `λ_S(D, p)`: the expected value of a template whose bits are each kept
//! with probability `p` and flipped otherwise.

use streamcsp_core::poly::Poly;
use streamcsp_core::{binomial, SymmetricPredicate};

use crate::error::{arg, Result};
use crate::level::{mu, LevelDistribution};

/// Per-level polynomials in `p`: `λ(D, p) = Σ_i D⟨i⟩ · level[i](p)`.
#[derive(Debug, Clone)]
pub struct LambdaTable {
    f: SymmetricPredicate,
    level: Vec<Poly>,
}

impl LambdaTable {
    pub fn new(f: &SymmetricPredicate) -> Self {
        let k = f.k();
        let level = (0..=k)
            .map(|i| {
                let mut acc = Poly::zero();
                for &s in f.s() {
                    // keep j of the i ones, flip s−j of the k−i zeros
                    for j in s.saturating_sub(k - i)..=i.min(s) {
                        let c = (binomial(i, j) * binomial(k - i, s - j)) as f64;
                        let q_pow = s + i - 2 * j;
                        let p_pow = k + 2 * j - s - i;
                        let term = Poly::one_minus_x_pow(q_pow).mul(&Poly::monomial(p_pow)).scale(c);
                        acc = acc.add(&term);
                    }
                }
                acc
            })
            .collect();
        Self { f: f.clone(), level }
    }

    pub fn predicate(&self) -> &SymmetricPredicate {
        &self.f
    }

    pub fn k(&self) -> usize {
        self.f.k()
    }

    /// `λ(D, ·)` as a single polynomial.
    pub fn poly(&self, d: &LevelDistribution) -> Poly {
        let mut coeffs = vec![0.0; self.k() + 1];
        for (m, p) in d.masses().iter().zip(&self.level) {
            for (c, x) in coeffs.iter_mut().zip(&p.coeffs) {
                *c += m * x;
            }
        }
        Poly::new(coeffs)
    }

    pub fn level_poly(&self, i: usize) -> &Poly {
        &self.level[i]
    }

    fn check(&self, d: &LevelDistribution) -> Result<()> {
        if d.k() != self.k() {
            return arg(format!("distribution has {} levels, predicate arity is {}", d.k() + 1, self.k()));
        }
        Ok(())
    }

    pub fn lambda(&self, d: &LevelDistribution, p: f64) -> Result<f64> {
        self.check(d)?;
        if !(0.0..=1.0).contains(&p) {
            return arg(format!("p = {p} outside [0, 1]"));
        }
        Ok(self.poly(d).eval(p))
    }

    /// `γ_S(D) = λ(D, 1) = Σ_{s∈S} D⟨s⟩`.
    pub fn gamma_dist(&self, d: &LevelDistribution) -> Result<f64> {
        self.check(d)?;
        Ok(self.f.s().iter().map(|&s| d.masses()[s]).sum())
    }

    /// `β_S(D) = max_p λ(D, p)` with its argmax (smallest on ties).
    pub fn beta_dist(&self, d: &LevelDistribution) -> Result<(f64, f64)> {
        self.check(d)?;
        Ok(self.poly(d).maximize_unit())
    }

    /// `β_S(D) / γ_{S,k}(μ(D))`, or `None` where the denominator vanishes.
    pub fn ratio(&self, d: &LevelDistribution) -> Option<f64> {
        let g = gamma_mu_unchecked(&self.f, mu(d));
        (g > GAMMA_FLOOR).then(|| self.poly(d).maximize_unit().0 / g)
    }
}

/// Denominators below this are treated as zero.
pub const GAMMA_FLOOR: f64 = 1e-14;

pub fn lambda(f: &SymmetricPredicate, d: &LevelDistribution, p: f64) -> Result<f64> {
    LambdaTable::new(f).lambda(d, p)
}

pub fn gamma_dist(f: &SymmetricPredicate, d: &LevelDistribution) -> Result<f64> {
    LambdaTable::new(f).gamma_dist(d)
}

pub fn beta_dist(f: &SymmetricPredicate, d: &LevelDistribution) -> Result<(f64, f64)> {
    LambdaTable::new(f).beta_dist(d)
}

/// `γ_{S,k}(μ) = min{(1+μ)/(1+ε_s), 1, (1−μ)/(1−ε_t)}` with `s = min S`,
/// `t = max S`; the last term is dropped when `t = k`.
pub fn gamma_mu(f: &SymmetricPredicate, mu: f64) -> Result<f64> {
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&mu) {
        return arg(format!("μ = {mu} outside [-1, 1]"));
    }
    Ok(gamma_mu_unchecked(f, mu.clamp(-1.0, 1.0)))
}

pub(crate) fn gamma_mu_unchecked(f: &SymmetricPredicate, mu: f64) -> f64 {
    let k = f.k();
    let es = crate::level::epsilon_f(f.min_s(), k);
    let et = crate::level::epsilon_f(f.max_s(), k);
    let mut g = ((1.0 + mu) / (1.0 + es)).min(1.0);
    if f.max_s() < k {
        g = g.min((1.0 - mu) / (1.0 - et));
    }
    g.max(0.0)
}
