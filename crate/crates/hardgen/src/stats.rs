use num_rational::Ratio;
use rand::Rng;
use streamcsp_core::{Case, Exec};

use crate::error::{arg, Result};
use crate::games::bpd_sample;
use crate::matching::random_hypermatching;
use crate::rng::stream_rng;

/// Monte Carlo work is split into this many independently seeded blocks, so
/// results do not depend on the executor.
const BLOCKS: usize = 64;

/// `½ Σ |P(ω) − Q(ω)|` over a shared finite universe.
pub fn tv_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return arg(format!("universes differ in size: {} vs {}", p.len(), q.len()));
    }
    Ok(0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>())
}

fn blocked_count(
    trials: usize,
    seed: u64,
    exec: Exec,
    body: impl Fn(&mut rand_chacha::ChaCha8Rng) -> u64 + Sync + Send,
) -> u64 {
    let blocks: Vec<(u64, usize)> = (0..BLOCKS)
        .map(|b| (b as u64, trials / BLOCKS + usize::from(b < trials % BLOCKS)))
        .filter(|&(_, c)| c > 0)
        .collect();
    exec.map(&blocks, |&(b, count)| {
        let mut rng = stream_rng(seed, b);
        (0..count).map(|_| body(&mut rng)).sum::<u64>()
    })
    .into_iter()
    .sum()
}

/// Bob's test after Alice reveals `x*` on a random `ñ`-set `S`: every edge
/// inside `S` must carry the label `x*_u ⊕ x*_v`.
fn birthday_accepts<R: Rng + ?Sized>(
    alpha_n: usize,
    n: usize,
    n_tilde: usize,
    case: Case,
    rng: &mut R,
) -> Result<bool> {
    let game = bpd_sample(alpha_n, n, case, rng)?;
    let mut revealed = vec![false; n];
    for v in rand::seq::index::sample(rng, n, n_tilde) {
        revealed[v] = true;
    }
    let p = &game.players[0];
    Ok(p.matching
        .edges
        .iter()
        .zip(&p.labels)
        .all(|(e, z)| !(revealed[e[0]] && revealed[e[1]]) || z[0] == game.x_star[e[0]] ^ game.x_star[e[1]]))
}

/// Empirical `|Pr_Yes[accept] − Pr_No[accept]|` over `trials` paired runs.
pub fn birthday_advantage(
    alpha_n: usize,
    n: usize,
    n_tilde: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<f64> {
    if n_tilde > n || 2 * alpha_n > n {
        return arg(format!("need ñ ≤ n and 2αn ≤ n, got ñ={n_tilde}, αn={alpha_n}, n={n}"));
    }
    if trials == 0 {
        return arg("no trials");
    }
    // yes and no acceptances are packed into one counter
    let both = |rng: &mut rand_chacha::ChaCha8Rng| {
        let yes = birthday_accepts(alpha_n, n, n_tilde, Case::Yes, rng).expect("validated");
        let no = birthday_accepts(alpha_n, n, n_tilde, Case::No, rng).expect("validated");
        u64::from(yes) << 32 | u64::from(no)
    };
    let packed = blocked_count(trials, seed, exec, both);
    let (yes, no) = (packed >> 32, packed & 0xFFFF_FFFF);
    Ok((yes as f64 - no as f64).abs() / trials as f64)
}

/// Fraction of matchings with `αn` edges that pair up `{0, …, ℓ−1}` among
/// themselves.
pub fn mc_h_alpha(l: usize, n: usize, alpha_n: usize, trials: usize, seed: u64, exec: Exec) -> Result<Ratio<u64>> {
    if l > n || 2 * alpha_n > n {
        return arg(format!("need ℓ ≤ n and 2αn ≤ n, got ℓ={l}, αn={alpha_n}, n={n}"));
    }
    if trials == 0 {
        return arg("no trials");
    }
    let hits = blocked_count(trials, seed, exec, |rng| {
        let m = random_hypermatching(2, alpha_n, n, rng).expect("validated");
        let inside = m.edges.iter().filter(|e| e[0] < l && e[1] < l).count();
        u64::from(2 * inside == l)
    });
    Ok(Ratio::new(hits, trials as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tv_examples() {
        assert_eq!(tv_distance(&[0.3, 0.7], &[0.3, 0.7]).unwrap(), 0.0);
        assert_eq!(tv_distance(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 1.0);
        assert!((tv_distance(&[0.7, 0.3], &[0.5, 0.5]).unwrap() - 0.2).abs() < 1e-15);
        assert!(tv_distance(&[1.0], &[0.5, 0.5]).is_err());
    }

    #[test]
    fn no_reveal_no_advantage() {
        let a = birthday_advantage(10, 100, 0, 500, 1, Exec::Parallel).unwrap();
        assert_eq!(a, 0.0);
    }

    #[test]
    fn executors_agree() {
        let a = mc_h_alpha(2, 20, 4, 3000, 9, Exec::Sequential).unwrap();
        let b = mc_h_alpha(2, 20, 4, 3000, 9, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn odd_and_perfect_sets() {
        assert_eq!(mc_h_alpha(3, 20, 5, 2000, 2, Exec::Parallel).unwrap(), Ratio::new(0, 1));
        assert_eq!(mc_h_alpha(10, 10, 5, 500, 2, Exec::Parallel).unwrap(), Ratio::new(1, 1));
    }
}
