//! Numeric check that `λ_{3}(D, p(D)) / γ_{{3},3}(μ(D))`, with `p(D)` the
//! marginal `(1+μ(D))/2`, is minimized over `Δ_3` at `(0,0,1,0)` with value 2/9.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_core::SymmetricPredicate;

use crate::lambda::{gamma_mu_unchecked, LambdaTable};
use crate::level::{mu, LevelDistribution};
use crate::nm::{to_simplex, NelderMead};

pub fn three_and_objective(d: &LevelDistribution) -> Option<f64> {
    let f = SymmetricPredicate::kand(3).expect("static");
    let m = d.masses();
    let p = m[1] / 3.0 + 2.0 * m[2] / 3.0 + m[3];
    let g = gamma_mu_unchecked(&f, mu(d));
    (g > 1e-12).then(|| LambdaTable::new(&f).poly(d).eval(p) / g)
}

/// Multi-start minimization; returns the minimum and its location.
pub fn three_and_minimum_check() -> (f64, LevelDistribution) {
    let f = SymmetricPredicate::kand(3).expect("static");
    let table = LambdaTable::new(&f);
    let objective = |y: &[f64]| {
        let d = LevelDistribution::from_raw(to_simplex(y));
        let m = d.masses();
        let p = m[1] / 3.0 + 2.0 * m[2] / 3.0 + m[3];
        let g = gamma_mu_unchecked(&f, mu(&d));
        if g <= 1e-12 {
            1e6
        } else {
            table.poly(&d).eval(p) / g
        }
    };
    let nm = NelderMead { tol: 1e-14, max_iter: 20_000, step: 0.25 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x3A4D);
    let mut best = (vec![0.5; 4], f64::INFINITY);
    for _ in 0..20 {
        let y0: Vec<f64> = (0..4).map(|_| rng.gen_range(0.05..1.0)).collect();
        let (y, v) = nm.minimize_restarting(&objective, &y0);
        if v < best.1 {
            best = (y, v);
        }
    }
    (best.1, LevelDistribution::from_raw(to_simplex(&best.0)))
}
