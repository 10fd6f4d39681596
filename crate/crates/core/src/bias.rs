use crate::error::{arg, Result};
use crate::instance::{Assignment, Instance};
use crate::rational::Q;

/// Signed bias of every variable: `+w` per positive occurrence, `−w` per
/// negated one.
pub fn bias_vector(inst: &Instance) -> Vec<i128> {
    let mut out = vec![0i128; inst.n()];
    for c in inst.constraints() {
        for (t, &v) in c.j.iter().enumerate() {
            out[v] += if c.b_bit(t) { -(c.w as i128) } else { c.w as i128 };
        }
    }
    out
}

pub fn bias_var(inst: &Instance, i: usize) -> Result<i128> {
    if i >= inst.n() {
        return arg(format!("variable {} outside 1..={}", i + 1, inst.n()));
    }
    Ok(bias_vector(inst)[i])
}

/// `Σ_i |bias(i)| / (kW)`, in `[0, 1]`.
pub fn bias_total(inst: &Instance) -> Result<Q> {
    let w = inst.require_weight()?;
    let l1: i128 = bias_vector(inst).iter().map(|b| b.abs()).sum();
    Ok(Q::new(l1, inst.k() as i128 * w as i128))
}

/// `x_i = 1` iff `bias(i) ≥ 0`; untouched variables go to 1.
pub fn majority_assignment(inst: &Instance) -> Result<Assignment> {
    inst.require_weight()?;
    Ok(Assignment(bias_vector(inst).into_iter().map(|b| b >= 0).collect()))
}

/// `(1/(kW)) Σ_i (−1)^{x_i+1} bias(i)`, the marginal of the template of `x`.
pub fn signed_bias(inst: &Instance, x: &Assignment) -> Result<Q> {
    let w = inst.require_weight()?;
    if x.len() != inst.n() {
        return arg(format!("assignment length {} != n = {}", x.len(), inst.n()));
    }
    let s: i128 = bias_vector(inst).iter().zip(&x.0).map(|(&b, &xi)| if xi { b } else { -b }).sum();
    Ok(Q::new(s, inst.k() as i128 * w as i128))
}
