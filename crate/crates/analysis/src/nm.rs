//! Nelder–Mead simplex search, plus the squared-coordinate map from `R^d`
//! onto the probability simplex used by every numeric search here.

pub struct NelderMead {
    pub tol: f64,
    pub max_iter: usize,
    pub step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 20_000, step: 0.25 }
    }
}

impl NelderMead {
    /// Minimize `f` from `x0`, returning `(argmin, value)`.
    pub fn minimize(&self, f: &dyn Fn(&[f64]) -> f64, x0: &[f64]) -> (Vec<f64>, f64) {
        let d = x0.len();
        let mut pts: Vec<Vec<f64>> = vec![x0.to_vec()];
        for i in 0..d {
            let mut p = x0.to_vec();
            p[i] += if p[i].abs() > 1e-3 { self.step * p[i].abs().max(0.1) } else { self.step };
            pts.push(p);
        }
        let mut vals: Vec<f64> = pts.iter().map(|p| f(p)).collect();
        for _ in 0..self.max_iter {
            let mut order: Vec<usize> = (0..=d).collect();
            order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
            pts = order.iter().map(|&i| pts[i].clone()).collect();
            vals = order.iter().map(|&i| vals[i]).collect();
            let spread = vals[d] - vals[0];
            let size = pts[1..].iter().map(|p| dist(p, &pts[0])).fold(0.0, f64::max);
            if spread.abs() <= self.tol && size <= self.tol.sqrt() {
                break;
            }
            let centroid: Vec<f64> = (0..d).map(|c| pts[..d].iter().map(|p| p[c]).sum::<f64>() / d as f64).collect();
            let along = |t: f64| -> Vec<f64> { (0..d).map(|c| centroid[c] + t * (pts[d][c] - centroid[c])).collect() };
            let xr = along(-1.0);
            let fr = f(&xr);
            if fr < vals[0] {
                let xe = along(-2.0);
                let fe = f(&xe);
                if fe < fr {
                    pts[d] = xe;
                    vals[d] = fe;
                } else {
                    pts[d] = xr;
                    vals[d] = fr;
                }
            } else if fr < vals[d - 1] {
                pts[d] = xr;
                vals[d] = fr;
            } else {
                let (xc, fc) = if fr < vals[d] {
                    let x = along(-0.5);
                    let v = f(&x);
                    (x, v)
                } else {
                    let x = along(0.5);
                    let v = f(&x);
                    (x, v)
                };
                if fc < vals[d].min(fr) {
                    pts[d] = xc;
                    vals[d] = fc;
                } else {
                    let best = pts[0].clone();
                    for i in 1..=d {
                        pts[i] = (0..d).map(|c| best[c] + 0.5 * (pts[i][c] - best[c])).collect();
                        vals[i] = f(&pts[i]);
                    }
                }
            }
        }
        let i = (0..=d).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).expect("nonempty");
        (pts[i].clone(), vals[i])
    }

    /// Minimize with restarts from the incumbent until no further progress.
    pub fn minimize_restarting(&self, f: &dyn Fn(&[f64]) -> f64, x0: &[f64]) -> (Vec<f64>, f64) {
        let (mut x, mut v) = self.minimize(f, x0);
        for _ in 0..8 {
            let (x2, v2) = self.minimize(f, &x);
            let done = v - v2 <= self.tol * 0.1;
            if v2 <= v {
                x = x2;
                v = v2;
            }
            if done {
                break;
            }
        }
        (x, v)
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `y ↦ y²/‖y‖²`: reaches every face of the simplex at finite `y`.
pub fn to_simplex(y: &[f64]) -> Vec<f64> {
    let total: f64 = y.iter().map(|v| v * v).sum();
    if total == 0.0 {
        return vec![1.0 / y.len() as f64; y.len()];
    }
    y.iter().map(|v| v * v / total).collect()
}

/// A preimage of `w` under [`to_simplex`].
pub fn from_simplex(w: &[f64]) -> Vec<f64> {
    w.iter().map(|v| v.max(0.0).sqrt()).collect()
}
