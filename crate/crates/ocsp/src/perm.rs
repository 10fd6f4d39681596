//! Permutations are written as 1-based rank vectors: `π_i` is the position
//! of element `i` in the order.

use std::collections::BTreeSet;
use std::fmt;

use streamcsp_core::Q;

use crate::error::{arg, Result};

/// Largest arity with a precomputed acceptance table.
pub const MAX_ORDER_ARITY: usize = 6;

/// The rank vector of `a`, or `None` (⊥) when entries repeat.
pub fn ord<T: Ord>(a: &[T]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(a.len());
    for (i, x) in a.iter().enumerate() {
        let mut rank = 1;
        for (j, y) in a.iter().enumerate() {
            if i != j && y == x {
                return None;
            }
            rank += usize::from(y < x);
        }
        out.push(rank);
    }
    Some(out)
}

/// `σ|_j = ord(σ_{j_1}, …, σ_{j_k})` for 0-based indices `j`.
pub fn induced(sigma: &[usize], j: &[usize]) -> Result<Vec<usize>> {
    if j.iter().any(|&v| v >= sigma.len()) {
        return arg(format!("index out of range in {j:?}"));
    }
    let vals: Vec<usize> = j.iter().map(|&v| sigma[v]).collect();
    ord(&vals).ok_or_else(|| crate::error::OcspError::Argument(format!("repeated index in {j:?}")))
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| v >= 1 && v <= p.len() && !std::mem::replace(&mut seen[v - 1], true))
}

/// Mixed-radix code of a rank vector, `Σ (π_t − 1) k^t`.
fn code(p: &[usize]) -> usize {
    p.iter().rev().fold(0, |acc, &r| acc * p.len() + r - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingPredicate {
    k: usize,
    accepted: BTreeSet<Vec<usize>>,
    table: Vec<bool>,
}

impl OrderingPredicate {
    pub fn new(k: usize, accepted: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if k == 0 || k > MAX_ORDER_ARITY {
            return arg(format!("ordering arity must be in 1..={MAX_ORDER_ARITY}, got {k}"));
        }
        let accepted: BTreeSet<Vec<usize>> = accepted.into_iter().collect();
        if accepted.is_empty() {
            return arg("an ordering predicate needs at least one accepted permutation");
        }
        if let Some(bad) = accepted.iter().find(|p| p.len() != k || !is_permutation(p)) {
            return arg(format!("{bad:?} is not a permutation of 1..={k}"));
        }
        let mut table = vec![false; k.pow(k as u32)];
        for p in &accepted {
            table[code(p)] = true;
        }
        Ok(Self { k, accepted, table })
    }

    /// Maximum acyclic subgraph: `u` before `v`.
    pub fn mas() -> Self {
        Self::new(2, [vec![1, 2]]).expect("valid")
    }

    /// Betweenness: the middle variable sits between the outer two.
    pub fn btwn() -> Self {
        Self::new(3, [vec![1, 2, 3], vec![3, 2, 1]]).expect("valid")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn accepted(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.accepted.iter()
    }

    /// `p` must be a permutation of `1..=k`.
    #[inline]
    pub fn eval(&self, p: &[usize]) -> bool {
        self.table[code(p)]
    }

    /// `Π(ord(a))`, false on ⊥.
    pub fn eval_values<T: Ord>(&self, a: &[T]) -> bool {
        ord(a).is_some_and(|p| self.eval(&p))
    }

    pub fn rho(&self) -> Q {
        let fact: i128 = (1..=self.k as i128).product();
        Q::new(self.accepted.len() as i128, fact)
    }

    /// `mas`, `btwn`, or the accepted permutations as digit strings.
    pub fn label(&self) -> String {
        if *self == Self::mas() {
            return "mas".into();
        }
        if *self == Self::btwn() {
            return "btwn".into();
        }
        let perms: Vec<String> =
            self.accepted.iter().map(|p| p.iter().map(|r| r.to_string()).collect::<String>()).collect();
        perms.join(",")
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mas" => return Ok(Self::mas()),
            "btwn" => return Ok(Self::btwn()),
            _ => {}
        }
        let perms: Vec<Vec<usize>> = s
            .split(',')
            .map(|p| p.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()
            .ok_or_else(|| crate::error::OcspError::Argument(format!("bad predicate {s:?}")))?;
        let k = perms.first().map_or(0, Vec::len);
        Self::new(k, perms)
    }
}

impl fmt::Display for OrderingPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
