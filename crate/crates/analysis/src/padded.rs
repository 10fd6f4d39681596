//! Padded one-wise pairs: `D_N = η D_0 + (1−η) D_N'` and
//! `D_Y = η D_0 + (1−η) D_Y'` where both residuals have zero marginal.

use streamcsp_core::SymmetricPredicate;

use crate::error::{arg, Result};
use crate::lambda::LambdaTable;
use crate::level::{epsilon_f, mu, LevelDistribution};

pub const MARGINAL_TOL: f64 = 1e-9;

/// `β_S(D_N) / γ_S(D_Y)` for a pair with matching marginals.
pub fn padded_pair_ratio(f: &SymmetricPredicate, d_n: &LevelDistribution, d_y: &LevelDistribution) -> Result<f64> {
    let (mn, my) = (mu(d_n), mu(d_y));
    if (mn - my).abs() > MARGINAL_TOL {
        return arg(format!("marginals differ: {mn} vs {my}"));
    }
    let table = LambdaTable::new(f);
    let (b, _) = table.beta_dist(d_n)?;
    let g = table.gamma_dist(d_y)?;
    if g <= 0.0 {
        return arg("γ(D_Y) = 0");
    }
    Ok(b / g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Padding {
    pub eta: f64,
    pub d0: Option<LevelDistribution>,
}

/// Smallest feasible padding, if any.
///
/// Writing `A = η D_0`, feasibility asks for `0 ≤ A ≤ min(D_N, D_Y)`
/// levelwise with `Σ ε_i A_i = μ` and `Σ A_i = η < 1`. The least-mass solution
/// fills the levels whose `ε_i` has the sign of `μ`, most extreme first, so
/// this is decided exactly rather than by scanning `η`.
pub fn padded_decomposition(d_n: &LevelDistribution, d_y: &LevelDistribution) -> Option<Padding> {
    if d_n.k() != d_y.k() {
        return None;
    }
    let k = d_n.k();
    let (mn, my) = (mu(d_n), mu(d_y));
    if (mn - my).abs() > MARGINAL_TOL {
        return None;
    }
    let target = 0.5 * (mn + my);
    if target.abs() <= MARGINAL_TOL {
        return Some(Padding { eta: 0.0, d0: None });
    }
    let cap: Vec<f64> = d_n.masses().iter().zip(d_y.masses()).map(|(a, b)| a.min(*b)).collect();
    let mut order: Vec<usize> = (0..=k).filter(|&i| epsilon_f(i, k) * target > 0.0).collect();
    order.sort_by(|&a, &b| epsilon_f(b, k).abs().total_cmp(&epsilon_f(a, k).abs()));
    let mut a = vec![0.0; k + 1];
    let mut need = target.abs();
    for i in order {
        if need <= 0.0 {
            break;
        }
        let e = epsilon_f(i, k).abs();
        let take = cap[i].min(need / e);
        a[i] = take;
        need -= take * e;
    }
    if need > MARGINAL_TOL {
        return None;
    }
    let eta: f64 = a.iter().sum();
    if eta >= 1.0 - MARGINAL_TOL {
        return None;
    }
    let d0 = LevelDistribution::normalized(a).ok();
    Some(Padding { eta, d0 })
}

pub fn is_padded_onewise_pair(d_n: &LevelDistribution, d_y: &LevelDistribution) -> bool {
    padded_decomposition(d_n, d_y).is_some()
}
