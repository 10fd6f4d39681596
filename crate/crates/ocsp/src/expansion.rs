//! Small-set and balanced-partition expansion, checked exhaustively.
//!
//! `N(Ψ, S)` counts constraints with at least two variables in `S`. A
//! `(γ, ε)`-SSE has `N(Ψ, S) ≤ εm` for all `|S| ≤ γn`; a `(γ, ε)`-BPE has
//! `Σ_a N(Ψ, b⁻¹(a)) ≤ εm` for every `b ∈ Z_q^n` with blocks of size `≤ γn`.
//! Every `(γ, ε)`-SSE is a `(γ, 3ε/γ)`-BPE.

use crate::error::{arg, OcspError, Result};

/// Subset enumeration cap.
pub const SSE_CAP: usize = 18;
/// Set-partition enumeration cap.
pub const BPE_CAP: usize = 12;

fn masks(n: usize, constraints: &[Vec<usize>]) -> Result<Vec<u32>> {
    constraints
        .iter()
        .map(|j| {
            if j.iter().any(|&v| v >= n) {
                return arg(format!("index out of range in {j:?}"));
            }
            Ok(j.iter().fold(0u32, |m, &v| m | 1 << v))
        })
        .collect()
}

pub fn count_twice_touching(constraints: &[Vec<usize>], set: &[usize]) -> usize {
    constraints.iter().filter(|j| j.iter().filter(|v| set.contains(v)).count() >= 2).count()
}

fn count_mask(cs: &[u32], s: u32) -> usize {
    cs.iter().filter(|&&c| (c & s).count_ones() >= 2).count()
}

/// `max_{|S| ≤ γn} N(Ψ, S) / m`; `N` grows with `S`, so only `|S| = ⌊γn⌋`
/// is enumerated.
pub fn sse_epsilon(n: usize, constraints: &[Vec<usize>], gamma: f64) -> Result<f64> {
    if n > SSE_CAP {
        return Err(OcspError::Resource { what: "subset enumeration", n, cap: SSE_CAP });
    }
    if constraints.is_empty() {
        return Err(OcspError::Empty);
    }
    let cs = masks(n, constraints)?;
    let size = ((gamma * n as f64 + 1e-9).floor() as usize).min(n);
    if size < 2 {
        return Ok(0.0);
    }
    let mut best = 0;
    // Gosper's hack over all `size`-subsets
    let mut s: u32 = (1 << size) - 1;
    while s < 1 << n {
        best = best.max(count_mask(&cs, s));
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    Ok(best as f64 / cs.len() as f64)
}

pub fn is_sse(n: usize, constraints: &[Vec<usize>], gamma: f64, eps: f64) -> Result<bool> {
    Ok(sse_epsilon(n, constraints, gamma)? <= eps + 1e-12)
}

/// `max_b Σ_a N(Ψ, b⁻¹(a)) / m` over partitions into at most `q` blocks of
/// size at most `⌊γn⌋`.
pub fn bpe_epsilon(n: usize, constraints: &[Vec<usize>], gamma: f64, q: usize) -> Result<f64> {
    if n > BPE_CAP {
        return Err(OcspError::Resource { what: "partition enumeration", n, cap: BPE_CAP });
    }
    if constraints.is_empty() {
        return Err(OcspError::Empty);
    }
    let cs = masks(n, constraints)?;
    let cap = ((gamma * n as f64 + 1e-9).floor() as usize).min(n);
    if cap == 0 || cap * q < n {
        return arg(format!("no partition of {n} variables into {q} blocks of size ≤ {cap}"));
    }
    let mut blocks: Vec<u32> = Vec::new();
    let mut best = 0;
    partitions(0, n, cap, q, &mut blocks, &cs, &mut best);
    Ok(best as f64 / cs.len() as f64)
}

fn partitions(v: usize, n: usize, cap: usize, q: usize, blocks: &mut Vec<u32>, cs: &[u32], best: &mut usize) {
    if v == n {
        *best = (*best).max(blocks.iter().map(|&b| count_mask(cs, b)).sum());
        return;
    }
    for i in 0..blocks.len() {
        if (blocks[i].count_ones() as usize) < cap {
            blocks[i] |= 1 << v;
            partitions(v + 1, n, cap, q, blocks, cs, best);
            blocks[i] &= !(1 << v);
        }
    }
    if blocks.len() < q {
        blocks.push(1 << v);
        partitions(v + 1, n, cap, q, blocks, cs, best);
        blocks.pop();
    }
}

pub fn is_bpe(n: usize, constraints: &[Vec<usize>], gamma: f64, q: usize, eps: f64) -> Result<bool> {
    Ok(bpe_epsilon(n, constraints, gamma, q)? <= eps + 1e-12)
}
