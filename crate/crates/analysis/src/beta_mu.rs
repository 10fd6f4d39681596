//! `β_{S,k}(μ)`: the smallest `β_S` over the slice `{D ∈ Δ_k : μ(D) = μ}`.
//!
//! `β_S` is a supremum of linear functionals and therefore convex, so its
//! minimum over the slice can sit in the interior. We evaluate every vertex
//! of the slice and also minimize over convex combinations of the vertices,
//! reporting both.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_core::SymmetricPredicate;

use crate::error::{arg, Result};
use crate::lambda::LambdaTable;
use crate::level::{epsilon_f, LevelDistribution};
use crate::nm::{to_simplex, NelderMead};

/// Vertex and interior estimates differing by more than this are flagged.
pub const DISAGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct BetaMu {
    pub value: f64,
    pub argmin: LevelDistribution,
    pub vertex_min: f64,
    pub interior_min: f64,
    /// The interior search beat the best vertex by more than the tolerance.
    pub disagreement: bool,
}

/// Extreme points of the marginal slice.
pub fn slice_vertices(k: usize, mu: f64) -> Vec<LevelDistribution> {
    let mut out = Vec::new();
    for i in 0..=k {
        if (epsilon_f(i, k) - mu).abs() <= 1e-12 {
            out.push(LevelDistribution::point(k, i));
        }
    }
    for i in 0..=k {
        for j in i + 1..=k {
            let (ei, ej) = (epsilon_f(i, k), epsilon_f(j, k));
            if ei + 1e-12 < mu && mu < ej - 1e-12 {
                out.push(LevelDistribution::two_level(k, i, j, (ej - mu) / (ej - ei)));
            }
        }
    }
    out
}

pub fn beta_mu(f: &SymmetricPredicate, mu: f64) -> Result<BetaMu> {
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&mu) {
        return arg(format!("μ = {mu} outside [-1, 1]"));
    }
    let mu = mu.clamp(-1.0, 1.0);
    let table = LambdaTable::new(f);
    let verts = slice_vertices(f.k(), mu);
    let beta = |d: &LevelDistribution| table.poly(d).maximize_unit().0;
    let (mut vi, mut vertex_min) = (0, f64::INFINITY);
    for (i, v) in verts.iter().enumerate() {
        let b = beta(v);
        if b < vertex_min {
            vertex_min = b;
            vi = i;
        }
    }
    let mut best = (verts[vi].clone(), vertex_min);
    let mut interior_min = vertex_min;
    if verts.len() > 1 {
        let combine = |y: &[f64]| {
            let w = to_simplex(y);
            let mut m = vec![0.0; f.k() + 1];
            for (wi, v) in w.iter().zip(&verts) {
                for (a, b) in m.iter_mut().zip(v.masses()) {
                    *a += wi * b;
                }
            }
            LevelDistribution::from_raw(m)
        };
        let objective = |y: &[f64]| beta(&combine(y));
        let nm = NelderMead { tol: 1e-13, max_iter: 4000, step: 0.25 };
        let mut rng = ChaCha8Rng::seed_from_u64(0xBE7A);
        for s in 0..8 {
            let y0: Vec<f64> = if s == 0 {
                vec![1.0; verts.len()]
            } else {
                (0..verts.len()).map(|_| rng.gen_range(0.05..1.0)).collect()
            };
            let (y, v) = nm.minimize_restarting(&objective, &y0);
            if v < interior_min {
                interior_min = v;
                if v < best.1 {
                    best = (combine(&y), v);
                }
            }
        }
    }
    Ok(BetaMu {
        value: best.1,
        argmin: best.0,
        vertex_min,
        interior_min,
        disagreement: vertex_min - interior_min > DISAGREEMENT_TOL,
    })
}
