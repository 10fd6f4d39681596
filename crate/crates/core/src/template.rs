use std::collections::BTreeMap;

use crate::error::{arg, Result};
use crate::instance::{Assignment, Instance};
use crate::rational::Q;

/// Distribution of `b(ℓ) ⊕ x|_{j(ℓ)}` when `ℓ` is drawn proportionally to its
/// weight. Keys are packed k-bit patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateDistribution {
    k: usize,
    masses: BTreeMap<u32, Q>,
}

impl TemplateDistribution {
    pub fn of(inst: &Instance, x: &Assignment) -> Result<Self> {
        let w = inst.require_weight()?;
        if x.len() != inst.n() {
            return arg(format!("assignment length {} != n = {}", x.len(), inst.n()));
        }
        let mut raw: BTreeMap<u32, i64> = BTreeMap::new();
        for c in inst.constraints() {
            *raw.entry(c.pattern(x)?).or_default() += c.w;
        }
        let masses = raw.into_iter().map(|(a, v)| (a, Q::new(v as i128, w as i128))).collect();
        Ok(Self { k: inst.k(), masses })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mass(&self, a: u32) -> Q {
        self.masses.get(&a).copied().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, Q)> + '_ {
        self.masses.iter().map(|(&a, &m)| (a, m))
    }

    pub fn total(&self) -> Q {
        self.masses.values().sum()
    }

    /// Mass on each Hamming-weight level `0..=k`.
    pub fn level_masses(&self) -> Vec<Q> {
        let mut out = vec![Q::default(); self.k + 1];
        for (&a, &m) in &self.masses {
            out[a.count_ones() as usize] += m;
        }
        out
    }

    /// Expected value of each coordinate, the marginal vector.
    pub fn marginals(&self) -> Vec<Q> {
        (0..self.k).map(|t| self.masses.iter().filter(|(&a, _)| a >> t & 1 == 1).map(|(_, &m)| m).sum()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Constraint;

    #[test]
    fn worked_example_levels() {
        let inst = Instance::from_constraints(
            2,
            2,
            [
                Constraint::new(0b00, vec![0, 1], 2).unwrap(),
                Constraint::new(0b10, vec![0, 1], 1).unwrap(),
                Constraint::new(0b11, vec![0, 1], 3).unwrap(),
            ],
        )
        .unwrap();
        let t = TemplateDistribution::of(&inst, &Assignment(vec![true, true])).unwrap();
        assert_eq!(t.level_masses(), vec![Q::new(1, 2), Q::new(1, 6), Q::new(1, 3)]);
        assert_eq!(t.total(), Q::from_integer(1));
    }

    #[test]
    fn single_constraint_point_mass() {
        let inst = Instance::from_constraints(3, 3, [Constraint::new(0b101, vec![2, 0, 1], 4).unwrap()]).unwrap();
        let x = Assignment(vec![true, false, true]);
        let t = TemplateDistribution::of(&inst, &x).unwrap();
        // x|_j = (x3, x1, x2) = (1, 1, 0) -> packed 0b011; xor 0b101 = 0b110
        assert_eq!(t.support().collect::<Vec<_>>(), vec![(0b110, Q::from_integer(1))]);
    }
}
