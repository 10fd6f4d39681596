use num_traits::ToPrimitive;
use proptest::prelude::*;
use streamcsp_analysis::h_alpha;
use streamcsp_core::{opt_value, to_f64, Case, Exec, Q};
use streamcsp_hardgen::*;

#[test]
fn yes_maxcut_always_planted_one() {
    for seed in 0..100 {
        let doc = sbpd_to_maxcut(50, 4, 20, Case::Yes, seed).unwrap();
        let x = &doc.planted.as_ref().unwrap().x;
        assert_eq!(doc.instance.value(x, &doc.predicate).unwrap(), Q::from_integer(1));
    }
}

/// No-case Max-CUT instances are random multigraphs; at average degree `d`
/// their cut fraction is near `1/2 + 0.7632/√d`, about 0.74 here.
#[test]
fn no_maxcut_is_far_from_cut() {
    let vals: Vec<f64> = (0..30)
        .map(|seed| {
            let doc = sbpd_to_maxcut(50, 4, 20, Case::No, seed).unwrap();
            to_f64(&opt_value(&doc.instance, &doc.predicate).unwrap().value)
        })
        .collect();
    assert!(vals.iter().all(|&v| v <= 0.8), "{vals:?}");
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    assert!((mean - (0.5 + 0.7632 / 10f64.sqrt())).abs() < 0.03, "{mean}");
}

#[test]
fn maxcut_degree_and_size() {
    let (t, an, n) = (30, 5, 20);
    let mut total = 0usize;
    let seeds = 200;
    for seed in 0..seeds {
        let doc = sbpd_to_maxcut(t, an, n, if seed % 2 == 0 { Case::Yes } else { Case::No }, seed).unwrap();
        let mut deg = vec![0usize; n];
        for c in doc.instance.constraints() {
            for &v in &c.j {
                deg[v] += 1;
            }
        }
        assert!(deg.iter().all(|&d| d <= t));
        total += doc.instance.m();
    }
    let trials = (seeds as usize * t * an) as f64;
    let sd = (trials * 0.25).sqrt() * 2.0; // x*-induced correlation in the Yes half
    assert!((total as f64 - trials / 2.0).abs() <= 3.0 * sd, "{total}");
}

#[test]
fn dicut_planted_values() {
    let mut yes = Vec::new();
    let mut no = Vec::new();
    for seed in 0..20 {
        let y = sbpd_prime_to_maxdicut(50, 8, 40, Case::Yes, seed).unwrap();
        yes.push(to_f64(&y.instance.value(&y.planted.as_ref().unwrap().x, &y.predicate).unwrap()));
        let n = sbpd_prime_to_maxdicut(50, 8, 40, Case::No, seed).unwrap();
        no.push(to_f64(&n.instance.value(&n.planted.as_ref().unwrap().x, &n.predicate).unwrap()));
    }
    assert!(yes.iter().all(|v| (v - 0.6).abs() <= 0.05), "{yes:?}");
    assert!(no.iter().all(|v| (v - 0.2).abs() <= 0.05), "{no:?}");
}

#[test]
fn no_dicut_opt_is_low() {
    let good = (0..20)
        .filter(|&seed| {
            let doc = sbpd_prime_to_maxdicut(50, 4, 20, Case::No, seed).unwrap();
            to_f64(&opt_value(&doc.instance, &doc.predicate).unwrap().value) <= 0.45
        })
        .count();
    assert!(good >= 18, "{good}/20");
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(
        sbpd_prime_to_maxdicut(5, 3, 12, Case::Yes, 7).unwrap(),
        sbpd_prime_to_maxdicut(5, 3, 12, Case::Yes, 7).unwrap()
    );
    assert_eq!(sbpd_to_maxcut(5, 3, 12, Case::No, 7).unwrap(), sbpd_to_maxcut(5, 3, 12, Case::No, 7).unwrap());
}

#[test]
fn sirsd_keep_rate_and_yes_value() {
    let lt = QaryPredicate::from_fn(4, 3, |a| a[0] < a[1] && a[1] < a[2]).unwrap();
    let (t, an, n) = (40, 4, 30);
    let mut kept = 0usize;
    let seeds = 50;
    for seed in 0..seeds {
        kept += sirsd_to_csp(&lt, &[0, 1, 2], t, an, n, Case::No, seed).unwrap().instance.m();
    }
    let trials = (seeds as usize * t * an) as f64;
    let p = 1.0 / 16.0;
    assert!((kept as f64 - trials * p).abs() <= 3.0 * (trials * p * (1.0 - p)).sqrt(), "{kept}");

    let omega = to_f64(&omega_b(&lt, &[0, 1, 2]).unwrap());
    assert!((omega - 0.5).abs() < 1e-15);
    // x* is skewed at any fixed small n, so average over seeds
    let mean = (0..20)
        .map(|seed| {
            let g = sirsd_to_csp(&lt, &[0, 1, 2], 100, 20, 200, Case::Yes, seed).unwrap();
            to_f64(&g.instance.value(&g.x_star, &lt).unwrap())
        })
        .sum::<f64>()
        / 20.0;
    assert!(mean >= omega - 0.05, "{mean}");
}

#[test]
fn binary_sirsd_matches_maxcut_statistics() {
    let cut = QaryPredicate::from_symmetric(&streamcsp_core::SymmetricPredicate::cut());
    let (t, an, n, seeds) = (20, 4, 16, 100u64);
    let mut m_gen = 0usize;
    let mut m_cut = 0usize;
    for seed in 0..seeds {
        let g = sirsd_to_csp(&cut, &[0, 1], t, an, n, Case::Yes, seed).unwrap();
        assert_eq!(g.instance.value(&g.x_star, &cut).unwrap(), Q::from_integer(1));
        let inst = g.instance.to_boolean().unwrap();
        assert_eq!(inst.m(), g.instance.m());
        m_gen += g.instance.m();
        m_cut += sbpd_to_maxcut(t, an, n, Case::Yes, seed + 1000).unwrap().instance.m();
    }
    let per = (seeds as usize * t * an) as f64;
    let sd = (per * 0.25).sqrt() * 2.0;
    assert!((m_gen as f64 - m_cut as f64).abs() <= 3.0 * sd * 2f64.sqrt());
}

fn within_three_sigma(est: f64, p: f64, trials: usize) {
    let sd = (p * (1.0 - p) / trials as f64).sqrt();
    assert!((est - p).abs() <= 3.0 * sd, "{est} vs {p}");
}

#[test]
fn matching_probability_matches_closed_form() {
    let trials = 1_000_000;
    for (l, n, an) in [(2, 100, 10), (4, 60, 12)] {
        let mc = mc_h_alpha(l, n, an, trials, 17, Exec::Parallel).unwrap();
        let exact = h_alpha(l, n, an).unwrap().to_f64().unwrap();
        within_three_sigma(*mc.numer() as f64 / *mc.denom() as f64, exact, trials);
    }
}

#[test]
fn birthday_protocol_has_advantage() {
    let n = 10_000;
    let a = birthday_advantage(1000, n, 800, 2000, 3, Exec::Parallel).unwrap();
    assert!(a >= 0.3, "{a}");
    let full = birthday_advantage(10, 40, 40, 500, 3, Exec::Parallel).unwrap();
    assert!(full > 0.99, "{full}");
}

proptest! {
    #[test]
    fn hypermatchings_are_vertex_disjoint(k in 1usize..5, n in 1usize..60, frac in 0.0f64..=1.0, seed: u64) {
        let edges = ((n / k) as f64 * frac) as usize;
        let m = random_hypermatching(k, edges, n, &mut stream_rng(seed, 0)).unwrap();
        prop_assert_eq!(m.len(), edges);
        let mut seen = vec![false; n];
        for e in &m.edges {
            prop_assert_eq!(e.len(), k);
            for &v in e {
                prop_assert!(v < n && !seen[v]);
                seen[v] = true;
            }
        }
    }

    #[test]
    fn yes_maxcut_planted_cut_is_perfect(t in 1usize..12, an in 1usize..6, extra in 0usize..20, seed: u64) {
        let n = 2 * an + extra;
        let doc = sbpd_to_maxcut(t, an, n, Case::Yes, seed).unwrap();
        let x = &doc.planted.as_ref().unwrap().x;
        let cut = doc.instance.satisfied_weight(x, &doc.predicate).unwrap();
        prop_assert_eq!(cut, doc.instance.total_weight());
    }
}
