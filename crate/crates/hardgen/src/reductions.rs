//! Streams of constraints built from game samples: each player contributes
//! the hyperedges whose labels pass a local test.

use rand::Rng;
use streamcsp_core::{Assignment, Case, Constraint, Document, Instance, Planted, SymmetricPredicate};

use crate::error::{arg, Result};
use crate::games::{sbpd_prime_sample, sbpd_sample, sirsd_sample};
use crate::qary::{QaryInstance, QaryPredicate};
use crate::rng::stream_rng;

/// Negation pattern of a DiCut edge `u → v`: satisfied iff `x_u = 1, x_v = 0`.
pub const DICUT_B: u32 = 0b10;

fn to_assignment(x: &[u32]) -> Assignment {
    Assignment(x.iter().map(|&b| b == 1).collect())
}

/// Max-CUT: each player keeps the edges labelled 1.
pub fn sbpd_to_maxcut(t: usize, alpha_n: usize, n: usize, case: Case, seed: u64) -> Result<Document> {
    let game = sbpd_sample(t, alpha_n, n, case, seed)?;
    let mut inst = Instance::new(n, 2);
    for p in &game.players {
        for (e, z) in p.matching.edges.iter().zip(&p.labels) {
            if z[0] == 1 {
                inst.push(Constraint::new(0, e.clone(), 1)?)?;
            }
        }
    }
    Ok(Document {
        instance: inst,
        predicate: SymmetricPredicate::cut(),
        planted: Some(Planted { x: to_assignment(&game.x_star), case, seed }),
    })
}

/// `⌈T·αn/4⌉` planted edges from `x* = 1` to `x* = 0`, drawn with
/// replacement.
pub fn planted_dicut_count(t: usize, alpha_n: usize) -> usize {
    (t * alpha_n).div_ceil(4)
}

/// Max-DiCut: a planted part agreeing with `x*`, then every player adds
/// both orientations of each edge labelled 1.
pub fn sbpd_prime_to_maxdicut(t: usize, alpha_n: usize, n: usize, case: Case, seed: u64) -> Result<Document> {
    let game = sbpd_prime_sample(t, alpha_n, n, case, seed)?;
    let sources: Vec<usize> = (0..n).filter(|&v| game.x_star[v] == 1).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| game.x_star[v] == 0).collect();
    let mut inst = Instance::new(n, 2);
    let mut rng = stream_rng(seed, t as u64 + 1);
    for _ in 0..planted_dicut_count(t, alpha_n) {
        let u = sources[rng.gen_range(0..sources.len())];
        let v = sinks[rng.gen_range(0..sinks.len())];
        inst.push(Constraint::new(DICUT_B, vec![u, v], 1)?)?;
    }
    for p in &game.players {
        for (e, z) in p.matching.edges.iter().zip(&p.labels) {
            if z[0] == 1 {
                inst.push(Constraint::new(DICUT_B, vec![e[0], e[1]], 1)?)?;
                inst.push(Constraint::new(DICUT_B, vec![e[1], e[0]], 1)?)?;
            }
        }
    }
    Ok(Document {
        instance: inst,
        predicate: SymmetricPredicate::two_and(),
        planted: Some(Planted { x: to_assignment(&game.x_star), case, seed }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryGenerated {
    pub instance: QaryInstance,
    pub x_star: Vec<u32>,
    pub case: Case,
    pub seed: u64,
}

/// General reduction: a player keeps hyperedge `e` iff `z_e − b` is a
/// constant vector. Kept hyperedges become plain `f(x|_e)` constraints, so
/// in the Yes case `x*` satisfies them with rate `ω_b(f)`.
#[allow(clippy::too_many_arguments)]
pub fn sirsd_to_csp(
    f: &QaryPredicate,
    b: &[u32],
    t: usize,
    alpha_n: usize,
    n: usize,
    case: Case,
    seed: u64,
) -> Result<QaryGenerated> {
    let (q, k) = (f.q(), f.k());
    if b.len() != k || b.iter().any(|&d| d >= q) {
        return arg(format!("base pattern {b:?} is not in Z_{q}^{k}"));
    }
    if !f.eval(b) {
        return arg(format!("base pattern {b:?} is rejected by the predicate"));
    }
    let game = sirsd_sample(k, q, t, alpha_n, n, case, seed)?;
    let mut inst = QaryInstance::new(n, q, k);
    for p in &game.players {
        for (e, z) in p.matching.edges.iter().zip(&p.labels) {
            let d0 = (z[0] + q - b[0]) % q;
            if z.iter().zip(b).all(|(&zi, &bi)| (zi + q - bi) % q == d0) {
                inst.push(e.clone())?;
            }
        }
    }
    Ok(QaryGenerated { instance: inst, x_star: game.x_star, case, seed })
}
