use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{arg, Result};

/// Vertex-disjoint ordered `k`-tuples on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypermatching {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypermatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `partner[v]` is the edge containing `v`, if any.
    pub fn edge_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (l, e) in self.edges.iter().enumerate() {
            for &v in e {
                out[v] = Some(l);
            }
        }
        out
    }
}

/// Uniform ordered hypermatching with `edges` hyperedges.
pub fn random_hypermatching<R: Rng + ?Sized>(k: usize, edges: usize, n: usize, rng: &mut R) -> Result<Hypermatching> {
    if k == 0 {
        return arg("arity must be positive");
    }
    let used = k.checked_mul(edges).filter(|&u| u <= n);
    let Some(used) = used else {
        return arg(format!("{edges} hyperedges of arity {k} do not fit on {n} vertices"));
    };
    let mut verts: Vec<usize> = (0..n).collect();
    let (chosen, _) = verts.partial_shuffle(rng, used);
    Ok(Hypermatching { k, n, edges: chosen.chunks(k).map(<[usize]>::to_vec).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    #[test]
    fn empty_and_oversized() {
        let mut rng = stream_rng(1, 0);
        assert!(random_hypermatching(2, 0, 5, &mut rng).unwrap().is_empty());
        assert!(random_hypermatching(3, 2, 5, &mut rng).is_err());
        assert_eq!(random_hypermatching(2, 5, 10, &mut rng).unwrap().len(), 5);
    }

    #[test]
    fn disjoint() {
        let mut rng = stream_rng(2, 0);
        for _ in 0..10_000 {
            let m = random_hypermatching(3, 4, 15, &mut rng).unwrap();
            let mut seen = [false; 15];
            for e in &m.edges {
                assert_eq!(e.len(), 3);
                for &v in e {
                    assert!(!seen[v]);
                    seen[v] = true;
                }
            }
        }
    }

    #[test]
    fn vertex_marginal() {
        let mut rng = stream_rng(3, 0);
        let (k, e, n, trials) = (2, 3, 20, 10_000);
        let hits = (0..trials)
            .filter(|_| random_hypermatching(k, e, n, &mut rng).unwrap().edges.iter().any(|ed| ed.contains(&0)))
            .count() as f64;
        let p = (k * e) as f64 / n as f64;
        let sd = (trials as f64 * p * (1.0 - p)).sqrt();
        assert!((hits - trials as f64 * p).abs() <= 3.0 * sd);
    }
}
