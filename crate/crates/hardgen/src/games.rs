//! One-way communication games on hypermatchings.
//!
//! Every player sees a matching `M_t` and one label block per hyperedge. In
//! the Boolean games a block has one entry, the folded value
//! `x*_u ⊕ x*_v`; in the general game it has `k` entries over `Z_q`.

use rand::Rng;
use streamcsp_core::Case;

use crate::error::{arg, Result};
use crate::matching::{random_hypermatching, Hypermatching};
use crate::rng::stream_rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayerSample {
    pub matching: Hypermatching,
    pub labels: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSample {
    pub case: Case,
    pub q: u32,
    pub x_star: Vec<u32>,
    pub players: Vec<PlayerSample>,
}

fn uniform_vec<R: Rng + ?Sized>(rng: &mut R, n: usize, q: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..q)).collect()
}

/// Boolean x* that is not constant, as Alice's planted DiCut part needs
/// both a source and a sink.
fn nonconstant_bits<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Vec<u32>> {
    if n < 2 {
        return arg("a non-constant assignment needs n ≥ 2");
    }
    loop {
        let x = uniform_vec(rng, n, 2);
        if x.iter().any(|&b| b != x[0]) {
            return Ok(x);
        }
    }
}

fn boolean_player<R: Rng + ?Sized>(
    x: &[u32],
    alpha_n: usize,
    rng: &mut R,
    label: impl Fn(u32, &mut R) -> u32,
) -> Result<PlayerSample> {
    let matching = random_hypermatching(2, alpha_n, x.len(), rng)?;
    let labels = matching.edges.iter().map(|e| vec![label(x[e[0]] ^ x[e[1]], rng)]).collect();
    Ok(PlayerSample { matching, labels })
}

/// A single round: Yes labels are `x*_u ⊕ x*_v`, No labels are uniform.
pub fn bpd_sample<R: Rng + ?Sized>(alpha_n: usize, n: usize, case: Case, rng: &mut R) -> Result<GameSample> {
    let x_star = uniform_vec(rng, n, 2);
    let player = match case {
        Case::Yes => boolean_player(&x_star, alpha_n, rng, |z, _| z)?,
        Case::No => boolean_player(&x_star, alpha_n, rng, |_, r| r.gen_range(0..2))?,
    };
    Ok(GameSample { case, q: 2, x_star, players: vec![player] })
}

/// `T` rounds sharing one hidden `x*`.
pub fn sbpd_sample(t: usize, alpha_n: usize, n: usize, case: Case, seed: u64) -> Result<GameSample> {
    let x_star = uniform_vec(&mut stream_rng(seed, 0), n, 2);
    let players = (1..=t as u64)
        .map(|s| {
            let mut rng = stream_rng(seed, s);
            match case {
                Case::Yes => boolean_player(&x_star, alpha_n, &mut rng, |z, _| z),
                Case::No => boolean_player(&x_star, alpha_n, &mut rng, |_, r| r.gen_range(0..2)),
            }
        })
        .collect::<Result<_>>()?;
    Ok(GameSample { case, q: 2, x_star, players })
}

/// Like [`sbpd_sample`] but No labels are the complement `1 ⊕ x*_u ⊕ x*_v`
/// and `x*` is never constant.
pub fn sbpd_prime_sample(t: usize, alpha_n: usize, n: usize, case: Case, seed: u64) -> Result<GameSample> {
    let x_star = nonconstant_bits(&mut stream_rng(seed, 0), n)?;
    let flip = u32::from(case == Case::No);
    let players = (1..=t as u64)
        .map(|s| boolean_player(&x_star, alpha_n, &mut stream_rng(seed, s), |z, _| z ^ flip))
        .collect::<Result<_>>()?;
    Ok(GameSample { case, q: 2, x_star, players })
}

/// Yes blocks are `x*|_e + c·1` for a fresh uniform `c`; No blocks are
/// uniform on `Z_q^k`.
pub fn sirsd_sample(k: usize, q: u32, t: usize, alpha_n: usize, n: usize, case: Case, seed: u64) -> Result<GameSample> {
    if q < 2 {
        return arg(format!("q must be at least 2, got {q}"));
    }
    let x_star = uniform_vec(&mut stream_rng(seed, 0), n, q);
    let players = (1..=t as u64)
        .map(|s| {
            let mut rng = stream_rng(seed, s);
            let matching = random_hypermatching(k, alpha_n, n, &mut rng)?;
            let labels = matching
                .edges
                .iter()
                .map(|e| match case {
                    Case::Yes => {
                        let c = rng.gen_range(0..q);
                        e.iter().map(|&v| (x_star[v] + c) % q).collect()
                    }
                    Case::No => uniform_vec(&mut rng, k, q),
                })
                .collect();
            Ok(PlayerSample { matching, labels })
        })
        .collect::<Result<_>>()?;
    Ok(GameSample { case, q, x_star, players })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bpd_yes_labels_cross() {
        let mut rng = stream_rng(5, 0);
        for _ in 0..50 {
            let g = bpd_sample(4, 12, Case::Yes, &mut rng).unwrap();
            for (e, z) in g.players[0].matching.edges.iter().zip(&g.players[0].labels) {
                assert_eq!(z[0], g.x_star[e[0]] ^ g.x_star[e[1]]);
            }
        }
    }

    #[test]
    fn bpd_no_labels_uniform() {
        let mut rng = stream_rng(6, 0);
        let (mut ones, mut total) = (0usize, 0usize);
        for _ in 0..2000 {
            let g = bpd_sample(5, 10, Case::No, &mut rng).unwrap();
            ones += g.players[0].labels.iter().filter(|z| z[0] == 1).count();
            total += 5;
        }
        let sd = (total as f64 * 0.25).sqrt();
        assert!((ones as f64 - total as f64 / 2.0).abs() <= 3.0 * sd);
    }

    #[test]
    fn constant_x_gives_zero_labels() {
        let x = vec![1u32; 8];
        let p = boolean_player(&x, 4, &mut stream_rng(1, 1), |z, _| z).unwrap();
        assert!(p.labels.iter().all(|z| z[0] == 0));
    }

    #[test]
    fn prime_no_labels_are_complements() {
        let g = sbpd_prime_sample(3, 4, 10, Case::No, 9).unwrap();
        assert!(g.x_star.iter().any(|&b| b != g.x_star[0]));
        for p in &g.players {
            for (e, z) in p.matching.edges.iter().zip(&p.labels) {
                assert_eq!(z[0], 1 ^ g.x_star[e[0]] ^ g.x_star[e[1]]);
            }
        }
    }

    #[test]
    fn sirsd_yes_shift_is_constant() {
        let g = sirsd_sample(3, 5, 4, 3, 12, Case::Yes, 3).unwrap();
        for p in &g.players {
            for (e, z) in p.matching.edges.iter().zip(&p.labels) {
                let d: Vec<u32> = e.iter().zip(z).map(|(&v, &zi)| (zi + 5 - g.x_star[v]) % 5).collect();
                assert!(d.iter().all(|&c| c == d[0]));
            }
        }
    }

    #[test]
    fn sirsd_binary_encodes_folded_bit() {
        let g = sirsd_sample(2, 2, 3, 4, 10, Case::Yes, 8).unwrap();
        for p in &g.players {
            for (e, z) in p.matching.edges.iter().zip(&p.labels) {
                assert_eq!(z[0] ^ z[1], g.x_star[e[0]] ^ g.x_star[e[1]]);
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(sbpd_sample(4, 3, 10, Case::No, 1).unwrap(), sbpd_sample(4, 3, 10, Case::No, 1).unwrap());
        assert_ne!(sbpd_sample(4, 3, 10, Case::No, 1).unwrap(), sbpd_sample(4, 3, 10, Case::No, 2).unwrap());
    }
}
