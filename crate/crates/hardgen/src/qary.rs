//! Predicates and instances over `Z_q`, used by the general reduction and by
//! coarsened ordering predicates.

use num_rational::Ratio;
use streamcsp_core::{Constraint, Instance, SymmetricPredicate, Q};

use crate::error::{arg, HardgenError, Result};

/// Largest `q^n` searched by [`QaryInstance::opt_value`].
pub const SEARCH_CAP: u64 = 1 << 24;

/// A truth table on `Z_q^k`, indexed by `Σ a_t q^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QaryPredicate {
    q: u32,
    k: usize,
    table: Vec<bool>,
}

impl QaryPredicate {
    pub fn from_fn(q: u32, k: usize, f: impl Fn(&[u32]) -> bool) -> Result<Self> {
        if q < 2 || k == 0 {
            return arg(format!("need q ≥ 2 and k ≥ 1, got q={q}, k={k}"));
        }
        let size = (q as u64).checked_pow(k as u32).filter(|&s| s <= SEARCH_CAP);
        let Some(size) = size else {
            return Err(HardgenError::Resource { q, n: k, cap: SEARCH_CAP });
        };
        let mut a = vec![0u32; k];
        let mut table = Vec::with_capacity(size as usize);
        for _ in 0..size {
            table.push(f(&a));
            for d in a.iter_mut() {
                *d += 1;
                if *d < q {
                    break;
                }
                *d = 0;
            }
        }
        Ok(Self { q, k, table })
    }

    pub fn from_symmetric(f: &SymmetricPredicate) -> Self {
        Self::from_fn(2, f.k(), |a| f.accepts_weight(a.iter().filter(|&&b| b == 1).count()))
            .expect("Boolean tables of arity ≤ 16 fit")
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn index(&self, a: &[u32]) -> usize {
        a.iter().rev().fold(0usize, |acc, &d| acc * self.q as usize + d as usize)
    }

    /// `a` must have length `k` with entries below `q`.
    pub fn eval(&self, a: &[u32]) -> bool {
        debug_assert!(a.len() == self.k && a.iter().all(|&d| d < self.q));
        self.table[self.index(a)]
    }

    pub fn accepted_count(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    pub fn rho(&self) -> Q {
        Q::new(self.accepted_count() as i128, self.table.len() as i128)
    }
}

/// `ω_b(f) = E_c[f(b + c·1)]` over uniform `c ∈ Z_q`.
pub fn omega_b(f: &QaryPredicate, b: &[u32]) -> Result<Q> {
    if b.len() != f.k() || b.iter().any(|&d| d >= f.q()) {
        return arg(format!("pattern {b:?} is not in Z_{}^{}", f.q(), f.k()));
    }
    let hits = (0..f.q())
        .filter(|&c| {
            let shifted: Vec<u32> = b.iter().map(|&d| (d + c) % f.q()).collect();
            f.eval(&shifted)
        })
        .count();
    Ok(Q::new(hits as i128, f.q() as i128))
}

/// Unit-weight constraints `f(x|_j)` over `Z_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryInstance {
    pub n: usize,
    pub q: u32,
    pub k: usize,
    pub constraints: Vec<Vec<usize>>,
}

impl QaryInstance {
    pub fn new(n: usize, q: u32, k: usize) -> Self {
        Self { n, q, k, constraints: Vec::new() }
    }

    pub fn push(&mut self, j: Vec<usize>) -> Result<()> {
        if j.len() != self.k {
            return arg(format!("constraint of arity {} in a {}-ary instance", j.len(), self.k));
        }
        if j.iter().any(|&v| v >= self.n) {
            return arg(format!("index out of range in {j:?}"));
        }
        for (a, &u) in j.iter().enumerate() {
            if j[a + 1..].contains(&u) {
                return arg(format!("repeated index in {j:?}"));
            }
        }
        self.constraints.push(j);
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.constraints.len()
    }

    fn satisfied(&self, x: &[u32], f: &QaryPredicate, buf: &mut Vec<u32>) -> usize {
        self.constraints
            .iter()
            .filter(|j| {
                buf.clear();
                buf.extend(j.iter().map(|&v| x[v]));
                f.eval(buf)
            })
            .count()
    }

    fn check(&self, f: &QaryPredicate) -> Result<()> {
        if f.q() != self.q || f.k() != self.k {
            return arg("predicate and instance disagree on q or k");
        }
        if self.constraints.is_empty() {
            return Err(streamcsp_core::CspError::Degenerate.into());
        }
        Ok(())
    }

    pub fn value(&self, x: &[u32], f: &QaryPredicate) -> Result<Q> {
        self.check(f)?;
        if x.len() != self.n || x.iter().any(|&d| d >= self.q) {
            return arg("assignment does not match the instance");
        }
        Ok(Ratio::new(self.satisfied(x, f, &mut Vec::new()) as i128, self.m() as i128))
    }

    /// Exhaustive maximum over `Z_q^n`, with the first maximizer in
    /// little-endian counting order.
    pub fn opt_value(&self, f: &QaryPredicate) -> Result<(Q, Vec<u32>)> {
        self.check(f)?;
        let total = (self.q as u64).checked_pow(self.n as u32).filter(|&s| s <= SEARCH_CAP);
        let Some(total) = total else {
            return Err(HardgenError::Resource { q: self.q, n: self.n, cap: SEARCH_CAP });
        };
        let mut x = vec![0u32; self.n];
        let mut buf = Vec::with_capacity(self.k);
        let mut best = (0, x.clone());
        for step in 0..total {
            let s = self.satisfied(&x, f, &mut buf);
            if s > best.0 || step == 0 {
                best = (s, x.clone());
            }
            for d in x.iter_mut() {
                *d += 1;
                if *d < self.q {
                    break;
                }
                *d = 0;
            }
        }
        Ok((Ratio::new(best.0 as i128, self.m() as i128), best.1))
    }

    /// The same constraints as a Boolean instance with no negations.
    pub fn to_boolean(&self) -> Result<Instance> {
        if self.q != 2 {
            return arg(format!("only q = 2 converts to a Boolean instance, got q = {}", self.q));
        }
        let mut inst = Instance::new(self.n, self.k);
        for j in &self.constraints {
            inst.push(Constraint::new(0, j.clone(), 1)?)?;
        }
        Ok(inst)
    }
}
