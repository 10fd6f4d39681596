use std::fmt;

use crate::error::{arg, CspError, Result};
use crate::predicate::{SymmetricPredicate, MAX_ARITY};
use crate::rational::Q;

/// One constraint `(b, j, w)`. Indices are 0-based; bit `t` of `b` negates
/// position `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub b: u32,
    pub j: Vec<usize>,
    pub w: i64,
}

impl Constraint {
    pub fn new(b: u32, j: Vec<usize>, w: i64) -> Result<Self> {
        if j.is_empty() || j.len() > MAX_ARITY {
            return arg(format!("arity {} outside 1..={MAX_ARITY}", j.len()));
        }
        if w < 1 {
            return arg(format!("weight {w} must be positive"));
        }
        if b >> j.len() != 0 {
            return arg("negation pattern longer than the index tuple");
        }
        for (a, x) in j.iter().enumerate() {
            if j[..a].contains(x) {
                return arg(format!("repeated variable index {}", x + 1));
            }
        }
        Ok(Self { b, j, w })
    }

    /// Build from a bit slice, `b[t]` is the negation of position `t`.
    pub fn from_bits(b: &[bool], j: Vec<usize>, w: i64) -> Result<Self> {
        if b.len() != j.len() {
            return arg("negation pattern and index tuple differ in length");
        }
        Self::new(pack(b), j, w)
    }

    pub fn k(&self) -> usize {
        self.j.len()
    }

    pub fn b_bit(&self, t: usize) -> bool {
        self.b >> t & 1 == 1
    }

    /// `b ⊕ x|_j`, packed.
    pub fn pattern(&self, x: &Assignment) -> Result<u32> {
        let mut a = self.b;
        for (t, &v) in self.j.iter().enumerate() {
            match x.0.get(v) {
                Some(true) => a ^= 1 << t,
                Some(false) => {}
                None => return arg(format!("index {} outside assignment of length {}", v + 1, x.len())),
            }
        }
        Ok(a)
    }

    pub fn satisfies(&self, x: &Assignment, f: &SymmetricPredicate) -> Result<bool> {
        if self.k() != f.k() {
            return arg(format!("constraint arity {} != predicate arity {}", self.k(), f.k()));
        }
        Ok(f.eval_packed(self.pattern(x)?))
    }
}

pub fn pack(bits: &[bool]) -> u32 {
    bits.iter().enumerate().fold(0, |acc, (t, &v)| acc | (v as u32) << t)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn zeros(n: usize) -> Self {
        Self(vec![false; n])
    }

    /// Bit `i` of `mask` is `x_i`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => arg(format!("bad assignment character {c:?}")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            f.write_str(if v { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A weighted list of constraints of common arity over `n` variables.
/// Repeated constraints are kept as-is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    k: usize,
    constraints: Vec<Constraint>,
    total_weight: i64,
}

impl Instance {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k, constraints: Vec::new(), total_weight: 0 }
    }

    pub fn push(&mut self, c: Constraint) -> Result<()> {
        if c.k() != self.k {
            return arg(format!("constraint arity {} != instance arity {}", c.k(), self.k));
        }
        if let Some(&v) = c.j.iter().find(|&&v| v >= self.n) {
            return arg(format!("index {} exceeds n = {}", v + 1, self.n));
        }
        self.total_weight = self.total_weight.checked_add(c.w).ok_or(CspError::Overflow)?;
        self.constraints.push(c);
        Ok(())
    }

    pub fn from_constraints(n: usize, k: usize, cs: impl IntoIterator<Item = Constraint>) -> Result<Self> {
        let mut inst = Self::new(n, k);
        for c in cs {
            inst.push(c)?;
        }
        Ok(inst)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.constraints.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn total_weight(&self) -> i64 {
        self.total_weight
    }

    pub(crate) fn require_weight(&self) -> Result<i64> {
        if self.total_weight == 0 {
            Err(CspError::Degenerate)
        } else {
            Ok(self.total_weight)
        }
    }

    fn check(&self, x: &Assignment, f: &SymmetricPredicate) -> Result<()> {
        if x.len() != self.n {
            return arg(format!("assignment length {} != n = {}", x.len(), self.n));
        }
        if f.k() != self.k {
            return arg(format!("predicate arity {} != instance arity {}", f.k(), self.k));
        }
        Ok(())
    }

    /// Satisfied weight under `x`.
    pub fn satisfied_weight(&self, x: &Assignment, f: &SymmetricPredicate) -> Result<i64> {
        self.check(x, f)?;
        let mut acc = 0i64;
        for c in &self.constraints {
            if f.eval_packed(c.pattern(x)?) {
                acc += c.w;
            }
        }
        Ok(acc)
    }

    /// `val_Ψ(x)` as an exact fraction of the total weight.
    pub fn value(&self, x: &Assignment, f: &SymmetricPredicate) -> Result<Q> {
        let w = self.require_weight()?;
        Ok(Q::new(self.satisfied_weight(x, f)? as i128, w as i128))
    }

    /// Concatenate constraint lists.
    pub fn union(&self, other: &Instance) -> Result<Instance> {
        if self.n != other.n || self.k != other.k {
            return arg(format!("cannot join (n={}, k={}) with (n={}, k={})", self.n, self.k, other.n, other.k));
        }
        let mut out = self.clone();
        for c in &other.constraints {
            out.push(c.clone())?;
        }
        Ok(out)
    }

    /// Every weight multiplied by `c`.
    pub fn scaled(&self, c: i64) -> Result<Instance> {
        let mut out = Instance::new(self.n, self.k);
        for con in &self.constraints {
            let w = con.w.checked_mul(c).ok_or(CspError::Overflow)?;
            out.push(Constraint::new(con.b, con.j.clone(), w)?)?;
        }
        Ok(out)
    }
}
