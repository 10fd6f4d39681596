use num_rational::Ratio;
use streamcsp_core::{Exec, Q};

use crate::error::{arg, OcspError, Result};
use crate::perm::{induced, is_permutation, OrderingPredicate};

/// Largest `n` for exhaustive search over `n!` orders.
pub const ORDER_CAP: usize = 10;

/// Unweighted constraints on `k` distinct variables each (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingInstance {
    pub n: usize,
    pub k: usize,
    pub constraints: Vec<Vec<usize>>,
}

impl OrderingInstance {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k, constraints: Vec::new() }
    }

    pub fn push(&mut self, j: Vec<usize>) -> Result<()> {
        if j.len() != self.k {
            return arg(format!("constraint of arity {} in a {}-ary instance", j.len(), self.k));
        }
        if j.iter().any(|&v| v >= self.n) {
            return arg(format!("index out of range in {j:?}"));
        }
        if crate::perm::ord(&j).is_none() {
            return arg(format!("repeated index in {j:?}"));
        }
        self.constraints.push(j);
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.constraints.len()
    }

    fn check(&self, pi: &OrderingPredicate) -> Result<()> {
        if pi.k() != self.k {
            return arg(format!("predicate arity {} != instance arity {}", pi.k(), self.k));
        }
        if self.constraints.is_empty() {
            return Err(OcspError::Empty);
        }
        Ok(())
    }

    fn satisfied(&self, sigma: &[usize], pi: &OrderingPredicate, buf: &mut Vec<usize>) -> usize {
        self.constraints
            .iter()
            .filter(|j| {
                buf.clear();
                buf.extend(j.iter().map(|&v| sigma[v]));
                pi.eval_values(buf)
            })
            .count()
    }

    pub fn ordvalue(&self, sigma: &[usize], pi: &OrderingPredicate) -> Result<Q> {
        self.check(pi)?;
        if sigma.len() != self.n || !is_permutation(sigma) {
            return arg(format!("{sigma:?} is not a permutation of 1..={}", self.n));
        }
        Ok(Ratio::new(self.satisfied(sigma, pi, &mut Vec::new()) as i128, self.m() as i128))
    }

    pub fn opt_ordvalue(&self, pi: &OrderingPredicate) -> Result<(Q, Vec<usize>)> {
        self.opt_ordvalue_with(pi, Exec::default())
    }

    /// Exhaustive maximum; ties go to the lexicographically smallest `σ`.
    /// The search splits on `σ_1`.
    pub fn opt_ordvalue_with(&self, pi: &OrderingPredicate, exec: Exec) -> Result<(Q, Vec<usize>)> {
        self.check(pi)?;
        if self.n > ORDER_CAP {
            return Err(OcspError::Resource { what: "order search", n: self.n, cap: ORDER_CAP });
        }
        let firsts: Vec<usize> = (1..=self.n).collect();
        let strata = exec.map(&firsts, |&first| {
            let mut rest: Vec<usize> = (1..=self.n).filter(|&v| v != first).collect();
            let mut sigma = vec![0; self.n];
            let mut buf = Vec::with_capacity(self.k);
            let mut best: Option<(usize, Vec<usize>)> = None;
            loop {
                sigma[0] = first;
                sigma[1..].copy_from_slice(&rest);
                let s = self.satisfied(&sigma, pi, &mut buf);
                if best.as_ref().map_or(true, |b| s > b.0) {
                    best = Some((s, sigma.clone()));
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            best.expect("at least one order")
        });
        let (s, sigma) = strata
            .into_iter()
            .fold(None::<(usize, Vec<usize>)>, |acc, b| match acc {
                Some(a) if a.0 >= b.0 => Some(a),
                _ => Some(b),
            })
            .expect("n ≥ 1");
        Ok((Ratio::new(s as i128, self.m() as i128), sigma))
    }

    /// `σ` with every entry reversed, `σ_i ↦ n + 1 − σ_i`.
    pub fn reversed(sigma: &[usize]) -> Vec<usize> {
        sigma.iter().map(|&s| sigma.len() + 1 - s).collect()
    }

    /// Induced permutation of every constraint under `σ`.
    pub fn patterns(&self, sigma: &[usize]) -> Result<Vec<Vec<usize>>> {
        self.constraints.iter().map(|j| induced(sigma, j)).collect()
    }
}

/// Lexicographic successor in place; false at the last permutation.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}
