use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_core::{bias_total, opt_value, to_f64, Constraint, Instance, SymmetricPredicate};
use streamcsp_sketch::*;

fn random_instance(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize, max_w: i64) -> Instance {
    let mut inst = Instance::new(n, k);
    for _ in 0..m {
        let mut vars: Vec<usize> = (0..n).collect();
        for t in 0..k {
            let s = rng.gen_range(t..n);
            vars.swap(t, s);
        }
        vars.truncate(k);
        inst.push(Constraint::new(rng.gen_range(0..1u32 << k), vars, rng.gen_range(1..=max_w)).unwrap()).unwrap();
    }
    inst
}

#[test]
fn single_entry_accuracy() {
    let hits = (0..200u64)
        .filter(|&seed| {
            let mut s = L1Sketch::new(50, 0.1, 0.05, seed).unwrap();
            s.update(17, 5).unwrap();
            (s.estimate() - 5.0).abs() <= 0.5
        })
        .count();
    assert!(hits >= 180, "{hits}/200");
}

#[test]
fn scaling_updates_scales_rows() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let updates: Vec<(usize, i64)> = (0..40).map(|_| (rng.gen_range(0..30), rng.gen_range(-9..=9))).collect();
    let (mut a, mut b) = (L1Sketch::new(30, 0.2, 0.1, 8).unwrap(), L1Sketch::new(30, 0.2, 0.1, 8).unwrap());
    for &(i, v) in &updates {
        a.update(i, v).unwrap();
        b.update(i, 7 * v).unwrap();
    }
    assert_eq!(b.median_twice_raw(), 7 * a.median_twice_raw());
    assert!((b.estimate() - 7.0 * a.estimate()).abs() <= 1e-12 * b.estimate());
}

#[test]
fn space_is_independent_of_stream_length() {
    let mut short = L1Sketch::new(1000, 0.5, 0.5, 2).unwrap();
    let mut long = short.clone();
    for i in 0..10 {
        short.update(i, 1).unwrap();
    }
    for i in 0..1_000_000usize {
        long.update(i % 1000, 1).unwrap();
    }
    assert_eq!(short.r(), long.r());
    assert_eq!(short.rows().len(), long.rows().len());
}

#[test]
fn bias_estimate_tracks_exact_bias() {
    let (eps, delta) = (0.1, 0.05);
    let mut hits = 0;
    let trials = 100;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(2..=4);
        let inst = random_instance(&mut rng, 40, k, 60, 5);
        let mut be = BiasEstimator::new(40, k, eps, delta, seed).unwrap();
        for c in inst.constraints() {
            be.feed(c).unwrap();
        }
        let exact = to_f64(&bias_total(&inst).unwrap());
        if (be.estimate() - exact).abs() <= eps * exact {
            hits += 1;
        }
    }
    assert!(hits as f64 >= (1.0 - delta - 0.05) * trials as f64, "{hits}");
}

#[test]
fn single_positive_constraint_has_bias_one() {
    let mut be = BiasEstimator::new(6, 3, 0.1, 0.05, 1).unwrap();
    be.feed(&Constraint::new(0, vec![0, 2, 4], 1).unwrap()).unwrap();
    assert!((be.estimate() - 1.0).abs() < 0.1);
}

#[test]
fn weight_scaling_leaves_estimate_unchanged() {
    let f = SymmetricPredicate::two_and();
    for seed in 0..20 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, 12, 2, 30, 4);
        let scaled = inst.scaled(13).unwrap();
        let a = estimate_value(&f, 12, inst.constraints(), 0.1, seed).unwrap();
        let b = estimate_value(&f, 12, scaled.constraints(), 0.1, seed).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.bias_hat.to_bits(), b.bias_hat.to_bits());
    }
}

#[test]
fn estimator_sandwich() {
    let eps = 0.05;
    let mut hits = 0;
    let trials = 30;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let k = rng.gen_range(2..=3);
        let f = SymmetricPredicate::kand(k).unwrap();
        let inst = random_instance(&mut rng, 10, k, 30, 3);
        let val = to_f64(&opt_value(&inst, &f).unwrap().value);
        let est = estimate_value(&f, 10, inst.constraints(), eps, seed).unwrap();
        if est.value >= (est.alpha - eps) * val - 1e-9 && est.value <= val + 1e-9 {
            hits += 1;
        }
    }
    assert!(3 * hits >= 2 * trials, "{hits}/{trials}");
}

fn stream_strategy() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..20, -50i64..50), 0..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn merge_of_halves_equals_whole(stream in stream_strategy(), cut in 0usize..60, seed in any::<u64>()) {
        let cut = cut.min(stream.len());
        let fresh = L1Sketch::new(20, 0.3, 0.2, seed).unwrap();
        let (mut whole, mut left, mut right) = (fresh.clone(), fresh.clone(), fresh.clone());
        for &(i, v) in &stream {
            whole.update(i, v).unwrap();
        }
        for &(i, v) in &stream[..cut] {
            left.update(i, v).unwrap();
        }
        for &(i, v) in &stream[cut..] {
            right.update(i, v).unwrap();
        }
        prop_assert_eq!(&left.merge(&right).unwrap(), &whole);
        prop_assert_eq!(&right.merge(&left).unwrap(), &whole);
        prop_assert_eq!(&whole.merge(&fresh).unwrap(), &whole);
    }

    #[test]
    fn merge_is_associative(a in stream_strategy(), b in stream_strategy(), c in stream_strategy()) {
        let build = |s: &[(usize, i64)]| {
            let mut sk = L1Sketch::new(20, 0.3, 0.2, 11).unwrap();
            for &(i, v) in s {
                sk.update(i, v).unwrap();
            }
            sk
        };
        let (x, y, z) = (build(&a), build(&b), build(&c));
        prop_assert_eq!(x.merge(&y).unwrap().merge(&z).unwrap(), x.merge(&y.merge(&z).unwrap()).unwrap());
    }

    #[test]
    fn order_does_not_matter(mut stream in stream_strategy(), seed in any::<u64>()) {
        let mut a = L1Sketch::new(20, 0.3, 0.2, seed).unwrap();
        for &(i, v) in &stream {
            a.update(i, v).unwrap();
        }
        stream.reverse();
        let mut b = L1Sketch::new(20, 0.3, 0.2, seed).unwrap();
        for &(i, v) in &stream {
            b.update(i, v).unwrap();
        }
        prop_assert_eq!(a, b);
    }

    #[test]
    fn split_estimators_merge_exactly(seed in any::<u64>(), cut in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, 9, 2, 30, 4);
        let f = SymmetricPredicate::two_and();
        let whole = estimate_value(&f, 9, inst.constraints(), 0.1, seed).unwrap();
        let mut left = ValueEstimator::new(&f, 9, 0.1, seed).unwrap();
        let mut right = left.clone();
        for c in &inst.constraints()[..cut] {
            left.feed(c).unwrap();
        }
        for c in &inst.constraints()[cut..] {
            right.feed(c).unwrap();
        }
        left.merge_from(&right).unwrap();
        let merged = left.finish().unwrap();
        prop_assert_eq!(merged.value.to_bits(), whole.value.to_bits());
    }
}
