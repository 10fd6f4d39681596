//! Moving between orderings of `[n]` and assignments in `Z_q^n`.
//!
//! `Z_q` is read through the representatives `ι(a) ∈ {1, …, q}` with
//! `ι(0) = q`, so the value 0 sorts last.

use streamcsp_core::Case;
use streamcsp_hardgen::{sirsd_to_csp, QaryInstance, QaryPredicate};

use crate::error::{arg, Result};
use crate::instance::OrderingInstance;
use crate::perm::{ord, OrderingPredicate};

#[inline]
pub fn iota(a: u32, q: u32) -> u32 {
    if a == 0 {
        q
    } else {
        a
    }
}

/// `Π^{↓q}(a) = Π(ord(ι(a_1), …, ι(a_k)))`, zero on repeated values. For
/// `q < k` every input repeats, so the table is identically zero.
pub fn coarsen_predicate(pi: &OrderingPredicate, q: u32) -> Result<QaryPredicate> {
    Ok(QaryPredicate::from_fn(q, pi.k(), |a| {
        let reps: Vec<u32> = a.iter().map(|&d| iota(d, q)).collect();
        ord(&reps).is_some_and(|p| pi.eval(&p))
    })?)
}

/// Block labels `⌈qσ_i/n⌉ ∈ {1, …, q}`.
pub fn coarsen_blocks(sigma: &[usize], q: u32) -> Vec<u32> {
    let n = sigma.len();
    sigma.iter().map(|&s| (q as usize * s).div_ceil(n) as u32).collect()
}

/// `σ^{↓q}`: the block labels reduced mod `q`.
pub fn coarsen_assignment(sigma: &[usize], q: u32) -> Vec<u32> {
    coarsen_blocks(sigma, q).into_iter().map(|b| b % q).collect()
}

/// Order variables by `(ι(x_i), i)`; the result is monotone in `ι(x)`.
pub fn refine_assignment(x: &[u32], q: u32) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by_key(|&i| (iota(x[i], q), i));
    let mut sigma = vec![0; x.len()];
    for (pos, &i) in idx.iter().enumerate() {
        sigma[i] = pos + 1;
    }
    sigma
}

pub fn refine_instance(inst: &QaryInstance) -> OrderingInstance {
    OrderingInstance { n: inst.n, k: inst.k, constraints: inst.constraints.clone() }
}

pub fn coarsen_instance(inst: &OrderingInstance, q: u32) -> QaryInstance {
    QaryInstance { n: inst.n, q, k: inst.k, constraints: inst.constraints.clone() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcspGenerated {
    pub instance: OrderingInstance,
    pub x_star: Vec<u32>,
    pub sigma_star: Vec<usize>,
    pub case: Case,
    pub seed: u64,
}

/// Sample the general game against `Π^{↓q}` with base pattern `b` and read
/// the result as an ordering instance.
#[allow(clippy::too_many_arguments)]
pub fn gen_ocsp_hard(
    pi: &OrderingPredicate,
    b: &[u32],
    q: u32,
    t: usize,
    alpha_n: usize,
    n: usize,
    case: Case,
    seed: u64,
) -> Result<OcspGenerated> {
    if (q as usize) < pi.k() {
        return arg(format!("q = {q} is smaller than the arity {}", pi.k()));
    }
    if b.len() != pi.k() || b.iter().any(|&d| d >= q) {
        return arg(format!("base pattern {b:?} is not in Z_{q}^{}", pi.k()));
    }
    let reps: Vec<u32> = b.iter().map(|&d| iota(d, q)).collect();
    if !ord(&reps).is_some_and(|p| pi.eval(&p)) {
        return arg(format!("base pattern {b:?} is not accepted by {pi}"));
    }
    let g = sirsd_to_csp(&coarsen_predicate(pi, q)?, b, t, alpha_n, n, case, seed)?;
    let sigma_star = refine_assignment(&g.x_star, q);
    Ok(OcspGenerated { instance: refine_instance(&g.instance), x_star: g.x_star, sigma_star, case, seed })
}
