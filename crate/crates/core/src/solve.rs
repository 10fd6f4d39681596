//! Exhaustive maximization over all `2^n` assignments.
//!
//! Each worker fixes the top bits of the assignment and walks the low bits in
//! Gray-code order, so every step flips one variable and touches only the
//! constraints incident to it.

use crate::error::{CspError, Result};
use crate::exec::Exec;
use crate::instance::{Assignment, Instance};
use crate::predicate::SymmetricPredicate;
use crate::rational::Q;

pub const DEFAULT_CAP: usize = 24;
const HARD_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub value: Q,
    pub satisfied_weight: i64,
    pub witness: Assignment,
}

pub fn opt_value(inst: &Instance, f: &SymmetricPredicate) -> Result<Optimum> {
    opt_value_with(inst, f, DEFAULT_CAP, Exec::Parallel)
}

pub fn opt_value_sequential(inst: &Instance, f: &SymmetricPredicate) -> Result<Optimum> {
    opt_value_with(inst, f, DEFAULT_CAP, Exec::Sequential)
}

/// Maximum value with the lexicographically smallest maximizer
/// (`x_1` compared first, `0 < 1`). The result does not depend on `exec`.
pub fn opt_value_with(inst: &Instance, f: &SymmetricPredicate, cap: usize, exec: Exec) -> Result<Optimum> {
    let w = inst.require_weight()?;
    let n = inst.n();
    if n > cap.min(HARD_CAP) {
        return Err(CspError::Resource { n, cap: cap.min(HARD_CAP) });
    }
    if f.k() != inst.k() {
        return Err(CspError::Argument(format!("predicate arity {} != instance arity {}", f.k(), inst.k())));
    }
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for (l, c) in inst.constraints().iter().enumerate() {
        for (t, &v) in c.j.iter().enumerate() {
            adj[v].push((l as u32, t as u32));
        }
    }
    let high = if n > 12 { (n - 10).min(10) } else { 0 };
    let low = n - high;
    let chunks: Vec<u64> = (0..1u64 << high).collect();
    let walker = Walker { inst, f, adj: &adj, n, low };
    let best = exec
        .map(&chunks, |&c| walker.walk(c))
        .into_iter()
        .reduce(|a, b| if better(b, a) { b } else { a })
        .expect("at least one chunk");
    Ok(Optimum {
        value: Q::new(best.0 as i128, w as i128),
        satisfied_weight: best.0,
        witness: Assignment::from_mask(best.1, n),
    })
}

// (satisfied weight, mask); higher weight wins, then lexicographically smaller x
fn better(a: (i64, u64), b: (i64, u64)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1.reverse_bits() < b.1.reverse_bits())
}

struct Walker<'a> {
    inst: &'a Instance,
    f: &'a SymmetricPredicate,
    adj: &'a [Vec<(u32, u32)>],
    n: usize,
    low: usize,
}

impl Walker<'_> {
    fn walk(&self, chunk: u64) -> (i64, u64) {
        let cs = self.inst.constraints();
        let mut mask = chunk << self.low;
        let mut cur: Vec<u32> = cs
            .iter()
            .map(|c| c.j.iter().enumerate().fold(c.b, |a, (t, &v)| a ^ ((mask >> v & 1) as u32) << t))
            .collect();
        let mut sat: i64 = cs.iter().zip(&cur).filter(|(_, &a)| self.f.eval_packed(a)).map(|(c, _)| c.w).sum();
        let mut best = (sat, mask);
        for g in 1u64..1 << self.low {
            let v = g.trailing_zeros() as usize;
            mask ^= 1 << v;
            for &(l, t) in &self.adj[v] {
                let l = l as usize;
                let before = self.f.eval_packed(cur[l]);
                cur[l] ^= 1 << t;
                let after = self.f.eval_packed(cur[l]);
                if before != after {
                    sat += if after { cs[l].w } else { -cs[l].w };
                }
            }
            if better((sat, mask), best) {
                best = (sat, mask);
            }
        }
        debug_assert!(self.n == 0 || best.1 >> self.n == 0);
        best
    }
}
