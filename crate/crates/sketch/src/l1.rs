//! Median-of-Cauchy sketch of `‖x‖₁` for a vector receiving turnstile updates.
//!
//! Row `t` keeps `Σ_i c_{t,i} x_i`, where `c_{t,i}` is a standard Cauchy
//! variate derived from `(seed, t, i)` by a keyed hash and never stored. Each
//! row is then distributed as `‖x‖₁` times a standard Cauchy, whose absolute
//! value has median 1, so the median of `|row|` estimates `‖x‖₁` with no
//! correction constant.
//!
//! Coefficients are rounded to fixed point (`2^-32` resolution) and rows are
//! `i128`, so updates commute exactly and merging two sketches is bit-identical
//! to sketching the concatenated stream. Rows wrap on overflow; the final
//! value is still exact whenever it fits.

use num_integer::Integer;

use crate::error::{Result, SketchError};

/// Constant `c` in `r = ⌈c·ln(1/δ)/ε²⌉`.
pub const REPETITION_CONSTANT: f64 = 8.0;
const FIXED_BITS: i32 = 32;
const U_CLAMP: f64 = 1.0 / (1u64 << 40) as f64;

pub fn repetitions(eps: f64, delta: f64) -> usize {
    (REPETITION_CONSTANT * (1.0 / delta).ln() / (eps * eps)).ceil() as usize
}

#[inline]
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform in `[2^-40, 1 − 2^-40]`, keyed by `(seed, t, i)`.
pub fn uniform(seed: u64, t: usize, i: usize) -> f64 {
    let z = mix(mix(seed ^ mix(t as u64)) ^ (i as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F));
    let u = ((z >> 11) as f64 + 0.5) / (1u64 << 53) as f64;
    u.clamp(U_CLAMP, 1.0 - U_CLAMP)
}

/// `tan(π(u − 1/2))`
pub fn cauchy(seed: u64, t: usize, i: usize) -> f64 {
    (std::f64::consts::PI * (uniform(seed, t, i) - 0.5)).tan()
}

#[inline]
fn fixed(seed: u64, t: usize, i: usize) -> i128 {
    (cauchy(seed, t, i) * 2f64.powi(FIXED_BITS)).round() as i128
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L1Sketch {
    n: usize,
    seed: u64,
    eps_bits: u64,
    delta_bits: u64,
    rows: Vec<i128>,
}

impl L1Sketch {
    pub fn new(n: usize, eps: f64, delta: f64, seed: u64) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0) {
            return Err(SketchError::Argument(format!("need 0 < ε, δ < 1, got ε={eps}, δ={delta}")));
        }
        Ok(Self {
            n,
            seed,
            eps_bits: eps.to_bits(),
            delta_bits: delta.to_bits(),
            rows: vec![0; repetitions(eps, delta)],
        })
    }

    /// Same parameters, all rows zero.
    pub fn zeroed(&self) -> Self {
        Self { rows: vec![0; self.rows.len()], ..self.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn eps(&self) -> f64 {
        f64::from_bits(self.eps_bits)
    }

    pub fn delta(&self) -> f64 {
        f64::from_bits(self.delta_bits)
    }

    pub fn rows(&self) -> &[i128] {
        &self.rows
    }

    /// `x_i += v` for a 0-based index `i`.
    pub fn update(&mut self, i: usize, v: i64) -> Result<()> {
        if i >= self.n {
            return Err(SketchError::Argument(format!("index {} outside 1..={}", i + 1, self.n)));
        }
        if v == 0 {
            return Ok(());
        }
        let v = v as i128;
        for (t, row) in self.rows.iter_mut().enumerate() {
            *row = row.wrapping_add(fixed(self.seed, t, i).wrapping_mul(v));
        }
        Ok(())
    }

    fn compatible(&self, other: &Self) -> bool {
        self.n == other.n && self.seed == other.seed && self.rows.len() == other.rows.len()
    }

    pub fn merge_from(&mut self, other: &Self) -> Result<()> {
        if !self.compatible(other) {
            return Err(SketchError::Mismatch);
        }
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            *a = a.wrapping_add(*b);
        }
        Ok(())
    }

    pub fn merge(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.merge_from(other)?;
        Ok(out)
    }

    /// Twice the median of `|row|` in raw fixed-point units, kept as an
    /// integer so callers can normalize exactly.
    pub fn median_twice_raw(&self) -> u128 {
        let mut mags: Vec<u128> = self.rows.iter().map(|r| r.unsigned_abs()).collect();
        mags.sort_unstable();
        let r = mags.len();
        if r % 2 == 1 {
            mags[r / 2].saturating_mul(2)
        } else {
            mags[r / 2 - 1].saturating_add(mags[r / 2])
        }
    }

    /// `median |row|`, the estimate of `‖x‖₁`.
    pub fn estimate(&self) -> f64 {
        self.median_twice_raw() as f64 * 2f64.powi(-FIXED_BITS - 1)
    }

    /// `median |row| / scale`, computed from the reduced fraction so that
    /// scaling the stream and `scale` together gives bit-identical output.
    pub fn estimate_over(&self, scale: u64) -> f64 {
        let num = self.median_twice_raw();
        let den = (scale as u128) << (FIXED_BITS + 1);
        let g = num.gcd(&den);
        if g == 0 {
            return 0.0;
        }
        (num / g) as f64 / (den / g) as f64
    }
}
