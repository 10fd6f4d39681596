//! Closed-form threshold values and structural invariants of the template
//! quantities, each checked against an independent computation.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_analysis::*;
use streamcsp_core::{Assignment, Constraint, Instance, SymmetricPredicate, TemplateDistribution};

fn pred(k: usize, s: &[usize]) -> SymmetricPredicate {
    SymmetricPredicate::new(k, s).unwrap()
}

fn dist(m: &[f64]) -> LevelDistribution {
    LevelDistribution::new(m.to_vec()).unwrap()
}

/// `2^{-(k-1)} (1 - 1/k²)^{(k-1)/2}`, written out again on the test side.
fn alpha_prime_oracle(k: usize) -> f64 {
    let k = k as f64;
    (1.0 - 1.0 / (k * k)).powf((k - 1.0) / 2.0) / 2f64.powf(k - 1.0)
}

/// Closed form for `f_{{(k+1)/2},k}` at its optimal `p'`.
fn middle_weight_oracle(k: usize) -> f64 {
    let kf = k as f64;
    let p = (3.0 * kf - kf * kf + (4.0 * kf + kf * kf - 2.0 * kf.powi(3) + kf.powi(4)).sqrt()) / (4.0 * kf);
    let h = k.div_ceil(2);
    let c = streamcsp_core::binomial(k, h) as f64;
    c * ((kf - 1.0) / (2.0 * kf) * (1.0 - p).powi(h as i32) * p.powi(h as i32 - 1)
        + (kf + 1.0) / (2.0 * kf) * (1.0 - p).powi(h as i32 - 1) * p.powi(h as i32))
}

#[test]
fn kand_thresholds() {
    for k in 2..=6 {
        let want = if k % 2 == 1 { alpha_prime_oracle(k) } else { 2.0 * alpha_prime_oracle(k + 1) };
        let r = alpha(&SymmetricPredicate::kand(k).unwrap());
        assert!(r.certified, "k={k}: {r:?}");
        assert!((r.alpha - want).abs() < 1e-6, "k={k}: {} vs {want}", r.alpha);
    }
    assert!((alpha_prime_oracle(5) - 36.0 / 625.0).abs() < 1e-15);
}

#[test]
fn near_and_thresholds() {
    for k in [4, 6] {
        let want = k as f64 / 2.0 * alpha_prime_oracle(k - 1);
        let r = alpha(&SymmetricPredicate::threshold(k - 1, k).unwrap());
        assert!(r.certified, "{r:?}");
        assert!((r.alpha - want).abs() < 1e-6);
    }
}

#[test]
fn tabulated_thresholds() {
    let a = alpha(&pred(3, &[2, 3]));
    assert!((a.alpha - (0.5 + 3f64.sqrt() / 18.0)).abs() < 1e-5);
    let b = alpha(&pred(5, &[3, 4, 5]));
    assert!((b.alpha - (0.5 + 3.0 * 5f64.sqrt() / 125.0)).abs() < 1e-5);
}

#[test]
fn middle_weight_thresholds() {
    for k in [3, 5] {
        let r = alpha(&pred(k, &[k.div_ceil(2)]));
        assert!(r.certified, "{r:?}");
        assert!((r.alpha - middle_weight_oracle(k)).abs() < 1e-6, "k={k}");
    }
}

#[test]
fn resistant_predicates_report_rho() {
    for f in [SymmetricPredicate::cut(), pred(3, &[1, 2, 3]), pred(4, &[2, 3])] {
        let r = alpha(&f);
        assert_eq!(r.method, Method::Resistant);
        assert!(!r.certified);
        assert!((r.alpha - streamcsp_core::to_f64(&f.rho())).abs() < 1e-15);
    }
}

#[test]
fn certificate_rejects_overshoot() {
    let f = SymmetricPredicate::kand(3).unwrap();
    let d = LevelDistribution::point(3, 2);
    assert!(certify_max_min(&f, &d, 2.0 / 3.0, 2.0 / 9.0).unwrap());
    assert!(!certify_max_min(&f, &d, 2.0 / 3.0, 0.25).unwrap());
    // wrong p* fails part (a)
    assert!(!certify_max_min(&f, &d, 0.5, 2.0 / 9.0).unwrap());
}

#[test]
fn three_and_unique_minimum() {
    let (v, d) = three_and_minimum_check();
    assert!((v - 2.0 / 9.0).abs() < 1e-6);
    assert!(d.distance(&LevelDistribution::point(3, 2)) < 1e-4);
}

#[test]
fn padded_pairs() {
    let three = SymmetricPredicate::kand(3).unwrap();
    let r = padded_pair_ratio(&three, &dist(&[0.0, 0.45, 0.45, 0.1]), &dist(&[0.45, 0.0, 0.0, 0.55])).unwrap();
    assert!((r - 0.2362).abs() < 5e-4, "{r}");
    assert!(!is_padded_onewise_pair(&LevelDistribution::point(3, 2), &dist(&[1.0 / 3.0, 0.0, 0.0, 2.0 / 3.0])));

    let (dn, dy) = (dist(&[0.0, 0.8, 0.2]), dist(&[0.4, 0.0, 0.6]));
    assert!(is_padded_onewise_pair(&dn, &dy));
    let pad = padded_decomposition(&dn, &dy).unwrap();
    assert!((pad.eta - 0.2).abs() < 1e-9);
    assert!((padded_pair_ratio(&SymmetricPredicate::two_and(), &dn, &dy).unwrap() - 4.0 / 9.0).abs() < 1e-12);

    let th = SymmetricPredicate::threshold(3, 4).unwrap();
    let r = padded_pair_ratio(&th, &dist(&[0.0, 0.0, 0.8, 0.2, 0.0]), &dist(&[4.0 / 15.0, 0.0, 0.0, 11.0 / 15.0, 0.0]))
        .unwrap();
    assert!((r - 4.0 / 9.0).abs() < 1e-9);
}

#[test]
fn dicut_composed_bounds() {
    // β_{2,2}(μ) ≥ (2/9)(1+μ) and γ_{2,2}(μ) ≤ (1+μ)/2 on a grid
    let f = SymmetricPredicate::two_and();
    for i in 0..=200 {
        let m = -1.0 + i as f64 / 100.0;
        let b = beta_mu(&f, m).unwrap().value;
        assert!(b >= 2.0 / 9.0 * (1.0 + m) - 1e-9, "μ={m}: {b}");
        assert!(gamma_mu(&f, m).unwrap() <= 0.5 * (1.0 + m) + 1e-12);
    }
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> Instance {
    let mut inst = Instance::new(n, k);
    for _ in 0..m {
        let mut vars: Vec<usize> = (0..n).collect();
        for t in 0..k {
            let s = rng.gen_range(t..n);
            vars.swap(t, s);
        }
        vars.truncate(k);
        let c = Constraint::new(rng.gen_range(0..1u32 << k), vars, rng.gen_range(1..4)).unwrap();
        inst.push(c).unwrap();
    }
    inst
}

/// `E_a[val(x ⊕ a)]` with `a_i = 0` with probability `p`, by enumerating `a`.
fn perturbation_oracle(inst: &Instance, f: &SymmetricPredicate, x: &Assignment, p: f64) -> f64 {
    let n = inst.n();
    let mut total = 0.0;
    for a in 0..1u64 << n {
        let ones = a.count_ones() as i32;
        let pr = p.powi(n as i32 - ones) * (1.0 - p).powi(ones);
        let y = Assignment(x.0.iter().enumerate().map(|(i, &b)| b ^ (a >> i & 1 == 1)).collect());
        total += pr * streamcsp_core::to_f64(&inst.value(&y, f).unwrap());
    }
    total
}

#[test]
fn perturbation_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1);
    for _ in 0..60 {
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(k.max(2)..=9);
        let f = loop {
            let s: Vec<usize> = (1..=k).filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() {
                break pred(k, &s);
            }
        };
        let m = rng.gen_range(1..15);
        let inst = random_instance(&mut rng, n, k, m);
        let x = Assignment((0..n).map(|_| rng.gen_bool(0.5)).collect());
        let p: f64 = rng.gen();
        let d = symmetrize(&TemplateDistribution::of(&inst, &x).unwrap());
        let got = lambda(&f, &d, p).unwrap();
        let want = perturbation_oracle(&inst, &f, &x, p);
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
}

#[test]
fn lambda_worked_examples() {
    let d = dist(&[0.0, 0.8, 0.2]);
    for p in [0.0, 0.3, 0.7, 1.0] {
        let got = lambda(&SymmetricPredicate::two_and(), &d, p).unwrap();
        assert!((got - 0.2 * p * (4.0 - 3.0 * p)).abs() < 1e-15);
    }
    let (b, p) = beta_dist(&SymmetricPredicate::two_and(), &d).unwrap();
    assert!((b - 4.0 / 15.0).abs() < 1e-12 && (p - 2.0 / 3.0).abs() < 1e-9);
    let (b, p) = beta_dist(&SymmetricPredicate::kand(3).unwrap(), &LevelDistribution::point(3, 2)).unwrap();
    assert!((b - 4.0 / 27.0).abs() < 1e-12 && (p - 2.0 / 3.0).abs() < 1e-9);
    assert!(lambda(&SymmetricPredicate::two_and(), &d, 1.5).is_err());
}

#[test]
fn gamma_examples() {
    assert!((gamma_dist(&SymmetricPredicate::two_and(), &dist(&[0.4, 0.0, 0.6])).unwrap() - 0.6).abs() < 1e-15);
    assert!((gamma_mu(&SymmetricPredicate::two_and(), 0.2).unwrap() - 0.6).abs() < 1e-15);
    assert!((gamma_mu(&SymmetricPredicate::kand(3).unwrap(), 1.0 / 3.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    assert!(gamma_mu(&SymmetricPredicate::two_and(), 1.1).is_err());
}

#[test]
fn h_alpha_examples() {
    use num_rational::BigRational;
    use num_traits::Zero;
    assert!(h_alpha(3, 50, 5).unwrap().is_zero());
    assert_eq!(h_alpha(2, 100, 10).unwrap(), BigRational::new(10.into(), 4950.into()));
    assert!(edge_count(0.15, 10).is_err());
}

fn level_strategy(k: usize) -> impl Strategy<Value = LevelDistribution> {
    prop::collection::vec(0.0f64..1.0, k + 1)
        .prop_filter("non-zero", |v| v.iter().sum::<f64>() > 1e-3)
        .prop_map(|v| LevelDistribution::normalized(v).unwrap())
}

fn predicate_strategy() -> impl Strategy<Value = SymmetricPredicate> {
    (1usize..=5).prop_flat_map(|k| {
        prop::collection::vec(any::<bool>(), k).prop_filter("non-empty", |b| b.iter().any(|&x| x)).prop_map(move |b| {
            let s: Vec<usize> = (1..=k).filter(|&s| b[s - 1]).collect();
            SymmetricPredicate::new(k, &s).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_is_linear_and_hits_gamma(
        (f, d1, d2) in predicate_strategy().prop_flat_map(|f| { let k = f.k(); (Just(f), level_strategy(k), level_strategy(k)) }),
        a in 0.0f64..1.0,
        p in 0.0f64..=1.0,
    ) {
        let mixed = d1.mix(&d2, a);
        let lhs = lambda(&f, &mixed, p).unwrap();
        let rhs = a * lambda(&f, &d1, p).unwrap() + (1.0 - a) * lambda(&f, &d2, p).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
        let g: f64 = f.s().iter().map(|&s| d1.masses()[s]).sum();
        prop_assert!((lambda(&f, &d1, 1.0).unwrap() - g).abs() < 1e-12);
        prop_assert!((gamma_dist(&f, &d1).unwrap() - g).abs() < 1e-12);
    }

    #[test]
    fn beta_dominates(
        (f, d) in predicate_strategy().prop_flat_map(|f| { let k = f.k(); (Just(f), level_strategy(k)) }),
    ) {
        let (b, arg) = beta_dist(&f, &d).unwrap();
        prop_assert!((lambda(&f, &d, arg).unwrap() - b).abs() < 1e-12);
        prop_assert!(b >= gamma_dist(&f, &d).unwrap() - 1e-12);
        for i in 0..=100 {
            prop_assert!(b >= lambda(&f, &d, i as f64 / 100.0).unwrap() - 1e-12);
        }
    }

    #[test]
    fn gamma_mu_is_a_supremum(
        (f, d) in predicate_strategy().prop_flat_map(|f| { let k = f.k(); (Just(f), level_strategy(k)) }),
    ) {
        let m = mu(&d).clamp(-1.0, 1.0);
        let g = gamma_mu(&f, m).unwrap();
        prop_assert!(g >= gamma_dist(&f, &d).unwrap() - 1e-12);
        prop_assert!((0.0..=1.0).contains(&g));
        let (s, t) = (f.min_s(), f.max_s());
        let mid = 0.5 * (-1.0 + 2.0 * s as f64 / f.k() as f64 + -1.0 + 2.0 * t as f64 / f.k() as f64);
        prop_assert!((gamma_mu(&f, mid).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrized_marginal_is_mean_marginal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(k.max(2)..=8);
        let m = rng.gen_range(1..12);
        let inst = random_instance(&mut rng, n, k, m);
        let x = Assignment((0..n).map(|_| rng.gen_bool(0.5)).collect());
        let t = TemplateDistribution::of(&inst, &x).unwrap();
        let mean: f64 = t.marginals().iter().map(streamcsp_core::to_f64).sum::<f64>() / k as f64;
        prop_assert!((mu(&symmetrize(&t)) - (2.0 * mean - 1.0)).abs() < 1e-12);
        let sb = streamcsp_core::to_f64(&streamcsp_core::signed_bias(&inst, &x).unwrap());
        prop_assert!((mu(&symmetrize(&t)) - sb).abs() < 1e-12);
    }
}

#[test]
fn alpha_never_below_rho() {
    for k in 1..=4 {
        for mask in 1u32..1 << k {
            let s: Vec<usize> = (1..=k).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            let f = pred(k, &s);
            let r = alpha(&f);
            let rho = streamcsp_core::to_f64(&f.rho());
            assert!(r.alpha >= rho - 1e-9, "{f}: {} < {rho}", r.alpha);
            assert_eq!(supports_one_wise(&f), r.method == Method::Resistant);
        }
    }
}
