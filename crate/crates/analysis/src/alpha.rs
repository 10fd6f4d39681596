//! `α(f_{S,k}) = inf_D β_S(D) / γ_{S,k}(μ(D))` by the max-min method.
//!
//! The search runs over two-level distributions first. The best candidates
//! are then pushed onto an exact saddle point: either a kink of `γ_{S,k}∘μ`
//! or the crossing of the ratio curves of the two vertices spanning the
//! candidate's linear piece. A saddle point that passes
//! [`certify_max_min`] gives a certified value. Otherwise a multi-start
//! Nelder–Mead over the whole simplex reports a numeric-only value.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_core::{Exec, SymmetricPredicate};

use crate::error::{arg, Result};
use crate::lambda::{gamma_mu_unchecked, LambdaTable, GAMMA_FLOOR};
use crate::level::{epsilon_f, mu, LevelDistribution};
use crate::nm::{from_simplex, to_simplex, NelderMead};

/// Slack allowed in both certificate checks.
pub const CERT_SLACK: f64 = 1e-10;
/// Agreement expected between reported values and closed forms.
pub const REPORT_TOL: f64 = 1e-9;

const GRID: usize = 1000;
const SNAP_MU: f64 = 1e-6;
const REFINE_TOP: usize = 4;
const NM_STARTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    MaxMinCertified,
    NumericOnly,
    /// `f` supports a one-wise independent distribution, so `α = ρ`.
    Resistant,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::MaxMinCertified => "max-min-certified",
            Method::NumericOnly => "numeric-only",
            Method::Resistant => "resistant",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaResult {
    pub s: Vec<usize>,
    pub k: usize,
    pub alpha: f64,
    pub d_star: LevelDistribution,
    pub p_star: f64,
    pub certified: bool,
    pub method: Method,
}

/// True iff some distribution supported on `f^{-1}(1)` has uniform
/// marginals, which makes `f` approximation-resistant.
pub fn supports_one_wise(f: &SymmetricPredicate) -> bool {
    let k = f.k();
    let half = k % 2 == 0 && f.s().contains(&(k / 2));
    let low = f.s().iter().any(|&s| 2 * s <= k);
    let high = f.s().iter().any(|&t| 2 * t >= k);
    half || (low && high)
}

/// `α'_k = 2^{−(k−1)} (1 − 1/k²)^{(k−1)/2}` for odd `k ≥ 3`.
pub fn alpha_prime(k: usize) -> Result<f64> {
    if k < 3 || k % 2 == 0 {
        return arg(format!("alpha' is defined for odd k >= 3, got {k}"));
    }
    let kf = k as f64;
    Ok(0.5f64.powi(k as i32 - 1) * (1.0 - 1.0 / (kf * kf)).powf((kf - 1.0) / 2.0))
}

/// Extreme points of the linear pieces of `γ_{S,k}∘μ` over `Δ_k`: every point
/// mass, and every two-level mixture whose marginal is exactly `ε_s` or `ε_t`.
pub fn certificate_vertices(f: &SymmetricPredicate) -> Vec<LevelDistribution> {
    let k = f.k();
    let mut out: Vec<LevelDistribution> = (0..=k).map(|i| LevelDistribution::point(k, i)).collect();
    let mut targets = vec![epsilon_f(f.min_s(), k)];
    if f.max_s() != f.min_s() {
        targets.push(epsilon_f(f.max_s(), k));
    }
    for &target in &targets {
        for i in 0..=k {
            for j in i + 1..=k {
                let (ei, ej) = (epsilon_f(i, k), epsilon_f(j, k));
                if ei < target && target < ej {
                    out.push(LevelDistribution::two_level(k, i, j, (ej - target) / (ej - ei)));
                }
            }
        }
    }
    out
}

/// Smallest value of `λ(E, p*) − (α − slack)·γ_{S,k}(μ(E))` over the
/// certificate vertices, and `β(D*) − λ(D*, p*)`.
pub fn certificate_margins(
    f: &SymmetricPredicate,
    d_star: &LevelDistribution,
    p_star: f64,
    alpha_cand: f64,
) -> Result<(f64, f64)> {
    let table = LambdaTable::new(f);
    let own = table.lambda(d_star, p_star)?;
    let (best, _) = table.beta_dist(d_star)?;
    let mut worst = f64::INFINITY;
    for e in certificate_vertices(f) {
        let g = gamma_mu_unchecked(f, mu(&e));
        if g <= 0.0 {
            continue;
        }
        let lam = table.poly(&e).eval(p_star);
        worst = worst.min(lam - (alpha_cand - CERT_SLACK) * g);
    }
    Ok((worst, best - own))
}

/// The max-min certificate: `p*` maximizes `λ(D*, ·)` to within the slack,
/// and `λ(E, p*) ≥ (α − slack)·γ_{S,k}(μ(E))` at every certificate vertex `E`.
/// Together these give `α(f) ≥ α − slack`; the value at `D*` bounds it above.
pub fn certify_max_min(
    f: &SymmetricPredicate,
    d_star: &LevelDistribution,
    p_star: f64,
    alpha_cand: f64,
) -> Result<bool> {
    let (worst, gap) = certificate_margins(f, d_star, p_star, alpha_cand)?;
    Ok(gap <= CERT_SLACK && worst >= 0.0)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    i: usize,
    j: usize,
    // weight on level i
    w: f64,
}

fn ratio_or_inf(table: &LambdaTable, d: &LevelDistribution) -> f64 {
    table.ratio(d).unwrap_or(f64::INFINITY)
}

fn best_on_edge(table: &LambdaTable, i: usize, j: usize) -> Option<Candidate> {
    let k = table.k();
    let at = |w: f64| ratio_or_inf(table, &LevelDistribution::two_level(k, i, j, w));
    let mut best = (f64::INFINITY, 0.0);
    for g in 0..=GRID {
        let w = g as f64 / GRID as f64;
        let v = at(w);
        if v < best.0 {
            best = (v, w);
        }
    }
    if !best.0.is_finite() {
        return None;
    }
    let h = 1.0 / GRID as f64;
    let (w, v) = golden(&at, (best.1 - h).max(0.0), (best.1 + h).min(1.0), 1e-12);
    let (value, w) = if v < best.0 { (v, w) } else { best };
    Some(Candidate { value, i, j, w })
}

fn golden(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Move a two-level candidate onto the saddle point of its linear piece.
fn refine(table: &LambdaTable, c: &Candidate) -> Option<(LevelDistribution, f64)> {
    let f = table.predicate();
    let k = f.k();
    let (ei, ej) = (epsilon_f(c.i, k), epsilon_f(c.j, k));
    let edge = |u: f64| LevelDistribution::two_level(k, c.i, c.j, u);
    let mu_of = |u: f64| u * ei + (1.0 - u) * ej;
    let mut us = vec![0.0, 1.0];
    for target in [epsilon_f(f.min_s(), k), epsilon_f(f.max_s(), k)] {
        if ei < target && target < ej {
            us.push((ej - target) / (ej - ei));
        }
    }
    us.sort_by(f64::total_cmp);
    us.dedup();

    for &u in &us {
        if (mu_of(u) - mu_of(c.w)).abs() <= SNAP_MU {
            let d = edge(u);
            let (_, p) = table.beta_dist(&d).ok()?;
            return Some((d, p));
        }
    }

    let lo = us.iter().cloned().filter(|&u| u < c.w).fold(f64::NEG_INFINITY, f64::max);
    let hi = us.iter().cloned().filter(|&u| u > c.w).fold(f64::INFINITY, f64::min);
    let (ea, eb) = (edge(hi), edge(lo));
    let ga = gamma_mu_unchecked(f, mu(&ea));
    let gb = gamma_mu_unchecked(f, mu(&eb));
    if ga <= GAMMA_FLOOR || gb <= GAMMA_FLOOR {
        return None;
    }
    let (pa, pb) = (table.poly(&ea), table.poly(&eb));
    let gap = |p: f64| pa.eval(p) / ga - pb.eval(p) / gb;
    let (_, p0) = table.beta_dist(&edge(c.w)).ok()?;
    let p = crossing_near(&gap, p0)?;
    let (da, db) = (pa.derivative().eval(p), pb.derivative().eval(p));
    if db == da {
        return None;
    }
    let u = db / (db - da);
    if !(0.0..=1.0).contains(&u) {
        return None;
    }
    Some((ea.mix(&eb, u), p))
}

/// Root of `g` nearest to `p0`, searched within ±0.1.
fn crossing_near(g: &dyn Fn(f64) -> f64, p0: f64) -> Option<f64> {
    let step = 1e-4;
    for s in 0..1000 {
        for dir in [1.0, -1.0] {
            let a = (p0 + dir * s as f64 * step).clamp(0.0, 1.0);
            let b = (p0 + dir * (s + 1) as f64 * step).clamp(0.0, 1.0);
            let (ga, gb) = (g(a), g(b));
            if ga == 0.0 {
                return Some(a);
            }
            if a != b && (ga < 0.0) != (gb < 0.0) {
                return Some(bisect(g, a.min(b), a.max(b)));
            }
        }
    }
    None
}

fn bisect(g: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let lo_neg = g(lo) < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn alpha(f: &SymmetricPredicate) -> AlphaResult {
    alpha_with(f, Exec::Parallel)
}

/// Memoized [`alpha`].
pub fn alpha_cached(f: &SymmetricPredicate) -> AlphaResult {
    static CACHE: OnceLock<Mutex<HashMap<SymmetricPredicate, AlphaResult>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().expect("alpha cache").get(f) {
        return r.clone();
    }
    let r = alpha(f);
    cache.lock().expect("alpha cache").insert(f.clone(), r.clone());
    r
}

pub fn alpha_with(f: &SymmetricPredicate, exec: Exec) -> AlphaResult {
    let k = f.k();
    let table = LambdaTable::new(f);
    let result = |alpha, d_star, p_star, method| AlphaResult {
        s: f.s().to_vec(),
        k,
        alpha,
        d_star,
        p_star,
        certified: method == Method::MaxMinCertified,
        method,
    };

    if supports_one_wise(f) {
        let d = LevelDistribution::uniform(k);
        let (_, p) = table.beta_dist(&d).expect("arity matches");
        return result(streamcsp_core::to_f64(&f.rho()), d, p, Method::Resistant);
    }

    let pairs: Vec<(usize, usize)> = (0..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect();
    let mut cands: Vec<Candidate> =
        exec.map(&pairs, |&(i, j)| best_on_edge(&table, i, j)).into_iter().flatten().collect();
    cands.sort_by(|a, b| a.value.total_cmp(&b.value));

    for c in cands.iter().take(REFINE_TOP) {
        let Some((d, p)) = refine(&table, c) else { continue };
        let Some(value) = table.ratio(&d) else { continue };
        if certify_max_min(f, &d, p, value).unwrap_or(false) {
            return result(value, d, p, Method::MaxMinCertified);
        }
    }

    let (d, value) = numeric_search(&table, cands.first(), exec);
    let (_, p) = table.beta_dist(&d).expect("arity matches");
    result(value, d, p, Method::NumericOnly)
}

/// Multi-start Nelder–Mead over the full simplex.
fn numeric_search(table: &LambdaTable, seed: Option<&Candidate>, exec: Exec) -> (LevelDistribution, f64) {
    let k = table.k();
    let objective = |y: &[f64]| {
        let d = LevelDistribution::from_raw(to_simplex(y));
        table.ratio(&d).unwrap_or(1e6)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1FA);
    let mut starts: Vec<Vec<f64>> =
        (0..NM_STARTS).map(|_| (0..=k).map(|_| rng.gen_range(0.05..1.0)).collect()).collect();
    if let Some(c) = seed {
        starts.push(from_simplex(LevelDistribution::two_level(k, c.i, c.j, c.w).masses()));
    }
    let nm = NelderMead { tol: 1e-10, max_iter: 4000, step: 0.25 };
    let runs = exec.map(&starts, |y0| nm.minimize_restarting(&objective, y0));
    let mut best = (LevelDistribution::from_raw(to_simplex(&runs[0].0)), runs[0].1);
    for (y, v) in runs.into_iter().skip(1) {
        if v < best.1 {
            best = (LevelDistribution::from_raw(to_simplex(&y)), v);
        }
    }
    if let Some(c) = seed {
        if c.value < best.1 {
            best = (LevelDistribution::two_level(k, c.i, c.j, c.w), c.value);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_wise_examples() {
        assert!(supports_one_wise(&SymmetricPredicate::cut()));
        assert!(!supports_one_wise(&SymmetricPredicate::two_and()));
        assert!(supports_one_wise(&SymmetricPredicate::new(4, &[2, 3]).unwrap()));
        assert!(!supports_one_wise(&SymmetricPredicate::threshold(3, 4).unwrap()));
    }

    #[test]
    fn alpha_prime_examples() {
        assert!((alpha_prime(3).unwrap() - 2.0 / 9.0).abs() < 1e-15);
        assert!((alpha_prime(5).unwrap() - 36.0 / 625.0).abs() < 1e-15);
        assert!(alpha_prime(4).is_err());
        assert!(alpha_prime(1).is_err());
    }

    #[test]
    fn two_and() {
        let r = alpha(&SymmetricPredicate::two_and());
        assert!(r.certified, "{r:?}");
        assert!((r.alpha - 4.0 / 9.0).abs() < 1e-9);
        let want = LevelDistribution::new(vec![0.0, 0.8, 0.2]).unwrap();
        assert!(r.d_star.distance(&want) < 1e-9);
        assert!((r.p_star - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn three_and() {
        let r = alpha(&SymmetricPredicate::kand(3).unwrap());
        assert!(r.certified);
        assert!((r.alpha - 2.0 / 9.0).abs() < 1e-9);
        assert!(r.d_star.distance(&LevelDistribution::point(3, 2)) < 1e-9);
        assert!((r.p_star - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn certificate_examples() {
        let and2 = SymmetricPredicate::two_and();
        let dn = LevelDistribution::new(vec![0.0, 0.8, 0.2]).unwrap();
        assert!(certify_max_min(&and2, &dn, 2.0 / 3.0, 4.0 / 9.0).unwrap());
        let and3 = SymmetricPredicate::kand(3).unwrap();
        let p2 = LevelDistribution::point(3, 2);
        assert!(certify_max_min(&and3, &p2, 2.0 / 3.0, 2.0 / 9.0).unwrap());
        assert!(!certify_max_min(&and3, &p2, 2.0 / 3.0, 0.25).unwrap());
        // p = 1/2 is not the maximizer of p²(1−p)
        assert!(!certify_max_min(&and3, &p2, 0.5, 2.0 / 9.0).unwrap());
    }

    #[test]
    fn resistant_returns_rho() {
        let r = alpha(&SymmetricPredicate::cut());
        assert_eq!(r.method, Method::Resistant);
        assert_eq!(r.alpha, 0.5);
        assert!(!r.certified);
    }
}
