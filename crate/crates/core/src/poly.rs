//! Dense univariate polynomials and their maximization on `[0, 1]`.
//!
//! Maximization isolates the real roots of the derivative by sign-change
//! bracketing on a uniform grid, bisects each bracket, and compares the
//! polynomial at every critical point and at both endpoints.

/// Grid step used to bracket derivative roots.
pub const ROOT_GRID: f64 = 1e-3;
/// Bracket width at which bisection stops.
pub const ROOT_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    /// `coeffs[d]` multiplies `x^d`.
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![0.0] }
    }

    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![0.0; d + 1];
        coeffs[d] = 1.0;
        Self { coeffs }
    }

    /// `(1 − x)^e`
    pub fn one_minus_x_pow(e: usize) -> Self {
        let mut coeffs = vec![0.0; e + 1];
        for (d, c) in coeffs.iter_mut().enumerate() {
            let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
            *c = sign * crate::rational::binomial(e, d) as f64;
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in other.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }

    pub fn scale(&self, c: f64) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(d, c)| d as f64 * c).collect();
        Poly { coeffs }
    }

    /// Roots of `self` in `[0, 1]` found by grid bracketing and bisection.
    /// Grid points where the polynomial vanishes exactly are included.
    pub fn roots_unit(&self) -> Vec<f64> {
        let steps = (1.0 / ROOT_GRID).round() as usize;
        let mut roots = Vec::new();
        let mut x0 = 0.0;
        let mut f0 = self.eval(x0);
        if f0 == 0.0 {
            roots.push(0.0);
        }
        for i in 1..=steps {
            let x1 = i as f64 / steps as f64;
            let f1 = self.eval(x1);
            if f1 == 0.0 {
                roots.push(x1);
            } else if f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
                roots.push(self.bisect(x0, x1, f0));
            }
            x0 = x1;
            f0 = f1;
        }
        roots
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
        let lo_neg = f_lo < 0.0;
        while hi - lo > ROOT_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = self.eval(mid);
            if fm == 0.0 {
                return mid;
            }
            if (fm < 0.0) == lo_neg {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Global maximum on `[0, 1]` as `(value, argmax)`; near-ties within
    /// `1e-15` go to the smaller argument.
    pub fn maximize_unit(&self) -> (f64, f64) {
        let mut cands = self.derivative().roots_unit();
        cands.push(0.0);
        cands.push(1.0);
        cands.sort_by(f64::total_cmp);
        let vals: Vec<f64> = cands.iter().map(|&x| self.eval(x)).collect();
        let best = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let i = vals.iter().position(|&v| v >= best - 1e-15).expect("nonempty");
        (vals[i], cands[i])
    }
}
