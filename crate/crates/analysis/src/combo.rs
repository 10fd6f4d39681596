use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{arg, Result};

fn big_binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `h_α(ℓ, n) = C(αn, ℓ/2) / C(n, ℓ)` for even `ℓ`, zero for odd `ℓ`: the
/// chance that a fixed set of `ℓ` vertices is perfectly paired by a uniform
/// matching with `αn` edges.
pub fn h_alpha(l: usize, n: usize, alpha_n: usize) -> Result<BigRational> {
    if l % 2 == 1 {
        return Ok(BigRational::zero());
    }
    if l > n {
        return arg(format!("ℓ = {l} exceeds n = {n}"));
    }
    if 2 * alpha_n > n {
        return arg(format!("a matching on {n} vertices has at most {} edges", n / 2));
    }
    Ok(BigRational::new(big_binomial(alpha_n, l / 2), big_binomial(n, l)))
}

/// `αn` as an integer, rejecting non-integral products.
pub fn edge_count(alpha: f64, n: usize) -> Result<usize> {
    let an = alpha * n as f64;
    let r = an.round();
    if (an - r).abs() > 1e-9 || r < 0.0 {
        return arg(format!("αn = {an} is not a non-negative integer"));
    }
    Ok(r as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn examples() {
        assert!(h_alpha(3, 100, 10).unwrap().is_zero());
        assert_eq!(h_alpha(2, 100, 10).unwrap(), BigRational::new(10.into(), 4950.into()));
        assert_eq!(h_alpha(10, 10, 5).unwrap(), BigRational::one());
        assert!(edge_count(0.15, 10).is_err());
        assert_eq!(edge_count(0.1, 100).unwrap(), 10);
    }

    #[test]
    fn upper_bound_holds() {
        // h ≤ (2αeℓ/n)^{ℓ/2}
        for n in [40usize, 100, 400] {
            for an in [1, n / 10, n / 4] {
                for l in (2..=20).step_by(2) {
                    let h = h_alpha(l, n, an).unwrap().to_f64().unwrap();
                    let alpha = an as f64 / n as f64;
                    let bound = (2.0 * alpha * std::f64::consts::E * l as f64 / n as f64).powf(l as f64 / 2.0);
                    assert!(h <= bound * (1.0 + 1e-12), "n={n} an={an} l={l}: {h} > {bound}");
                }
            }
        }
    }
}
