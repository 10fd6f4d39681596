use num_rational::Ratio;
use num_traits::ToPrimitive;

/// Exact rational used for values, biases and template masses.
pub type Q = Ratio<i128>;

pub fn binomial(n: usize, r: usize) -> i128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: i128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
