use std::fmt;

use crate::error::{arg, Result};
use crate::rational::{binomial, Q};

/// Largest supported arity. Negation patterns are packed into a `u32`.
pub const MAX_ARITY: usize = 16;

/// `f_{S,k}`: accepts a k-bit string iff its Hamming weight lies in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricPredicate {
    k: usize,
    s: Vec<usize>,
    // bit w set iff weight w is accepted
    mask: u32,
}

impl SymmetricPredicate {
    pub fn new(k: usize, s: &[usize]) -> Result<Self> {
        if k == 0 || k > MAX_ARITY {
            return arg(format!("arity {k} outside 1..={MAX_ARITY}"));
        }
        if s.is_empty() {
            return arg("accepted weight set S is empty");
        }
        let mut mask = 0u32;
        for &w in s {
            if w == 0 || w > k {
                return arg(format!("weight {w} outside 1..={k}"));
            }
            mask |= 1 << w;
        }
        let s = (0..=k).filter(|w| mask >> w & 1 == 1).collect();
        Ok(Self { k, s, mask })
    }

    pub fn kand(k: usize) -> Result<Self> {
        Self::new(k, &[k])
    }

    /// `Th^t_k`, weights `t..=k`.
    pub fn threshold(t: usize, k: usize) -> Result<Self> {
        if t == 0 || t > k {
            return arg(format!("threshold {t} outside 1..={k}"));
        }
        Self::new(k, &(t..=k).collect::<Vec<_>>())
    }

    /// Max-CUT: `S = {1}`, `k = 2`.
    pub fn cut() -> Self {
        Self::new(2, &[1]).expect("static")
    }

    pub fn two_and() -> Self {
        Self::new(2, &[2]).expect("static")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn min_s(&self) -> usize {
        self.s[0]
    }

    pub fn max_s(&self) -> usize {
        self.s[self.s.len() - 1]
    }

    #[inline]
    pub fn accepts_weight(&self, w: usize) -> bool {
        w < 32 && self.mask >> w & 1 == 1
    }

    /// Evaluate on a packed pattern (bit t is coordinate t).
    #[inline]
    pub fn eval_packed(&self, a: u32) -> bool {
        self.mask >> a.count_ones() & 1 == 1
    }

    pub fn eval(&self, a: &[bool]) -> Result<bool> {
        if a.len() != self.k {
            return arg(format!("input length {} != arity {}", a.len(), self.k));
        }
        Ok(self.accepts_weight(a.iter().filter(|&&x| x).count()))
    }

    /// `Some(t)` iff `S = {t,…,k}`.
    pub fn threshold_t(&self) -> Option<usize> {
        let t = self.min_s();
        (self.s.len() == self.k - t + 1).then_some(t)
    }

    /// Fraction of all 2^k inputs accepted.
    pub fn rho(&self) -> Q {
        let num: i128 = self.s.iter().map(|&w| binomial(self.k, w)).sum();
        Q::new(num, 1i128 << self.k)
    }

    /// `max_r Σ_{s∈S} C(k,s) r^s (1−r)^{k−s}`: the best product-Bernoulli value.
    /// Returns `(value, r)`.
    pub fn rho_single_family(&self) -> (f64, f64) {
        let mut p = crate::poly::Poly::zero();
        for &s in &self.s {
            let c = binomial(self.k, s) as f64;
            let term = crate::poly::Poly::monomial(s).mul(&crate::poly::Poly::one_minus_x_pow(self.k - s));
            p = p.add(&term.scale(c));
        }
        p.maximize_unit()
    }

    pub fn label(&self) -> String {
        let s: Vec<String> = self.s.iter().map(|w| w.to_string()).collect();
        s.join(",")
    }
}

impl fmt::Display for SymmetricPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f_{{{}}},{}", self.label(), self.k)
    }
}
