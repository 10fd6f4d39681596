//! The acceptance battery A1–A14. Each criterion is timed against its own
//! budget and derives its randomness from one base seed.

use std::time::Instant;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_analysis::{
    alpha, alpha_prime, beta_mu, gamma_mu, h_alpha, is_padded_onewise_pair, lambda, padded_decomposition,
    padded_pair_ratio, symmetrize, three_and_minimum_check, LevelDistribution,
};
use streamcsp_core::{
    bias_total, binomial, opt_value, to_f64, Assignment, Case, Constraint, Exec, Instance, SymmetricPredicate,
    TemplateDistribution, Q,
};
use streamcsp_hardgen::{
    birthday_advantage, mc_h_alpha, omega_b, sbpd_prime_to_maxdicut, sbpd_to_maxcut, QaryInstance,
};
use streamcsp_ocsp::{coarsen_predicate, refine_instance, OrderingPredicate};
use streamcsp_sketch::{estimate_value, L1Sketch};

use crate::report::Report;

pub const IDS: [&str; 14] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14"];

/// Criteria that fail at the prescribed sizes for reasons outside the code.
pub const KNOWN_UNATTAINABLE: &[(&str, &str)] = &[(
    "A12",
    "No-case Max-CUT at n=20, T=50, αn=4 keeps ~100 random edges (average degree ~10); \
     such graphs have max-cut ≈ 1/2 + 0.76/√10 ≈ 0.74, above the 0.70 band",
)];

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget: f64,
}

impl Criterion {
    pub fn report(&self) -> Report {
        Report::new()
            .text("id", self.id)
            .bool("passed", self.passed)
            .text("detail", &self.detail)
            .float("seconds", self.seconds)
            .float("budget", self.budget)
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let slow =
            if self.seconds > self.budget { format!(", over the {} s budget", self.budget) } else { String::new() };
        format!("{:<4} {verdict}  {} ({:.2} s{slow})", self.id, self.detail, self.seconds)
    }
}

pub fn table(results: &[Criterion]) -> String {
    let mut out: String = results.iter().map(|c| c.line() + "\n").collect();
    let passed = results.iter().filter(|c| c.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
    out
}

type Check = fn(u64) -> (bool, String);

fn checks() -> [(&'static str, f64, Check); 14] {
    [
        ("A1", 1.0, a1),
        ("A2", 30.0, a2),
        ("A3", 30.0, a3),
        ("A4", 60.0, a4),
        ("A5", 30.0, a5),
        ("A6", 60.0, a6),
        ("A7", 120.0, a7),
        ("A8", 60.0, a8),
        ("A9", 120.0, a9),
        ("A10", 120.0, a10),
        ("A11", 120.0, a11),
        ("A12", 180.0, a12),
        ("A13", 120.0, a13),
        ("A14", 60.0, a14),
    ]
}

fn derive(seed: u64, i: usize) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run the named criteria in order; all of them when `ids` is empty.
pub fn run_selected(ids: &[&str], seed: u64) -> Vec<Criterion> {
    checks()
        .into_iter()
        .enumerate()
        .filter(|(_, (id, _, _))| ids.is_empty() || ids.contains(id))
        .map(|(i, (id, budget, check))| {
            let start = Instant::now();
            let (ok, detail) = check(derive(seed, i));
            let seconds = start.elapsed().as_secs_f64();
            Criterion { id, passed: ok && seconds <= budget, detail, seconds, budget }
        })
        .collect()
}

pub fn run_all(seed: u64) -> Vec<Criterion> {
    run_selected(&[], seed)
}

fn pred(k: usize, s: &[usize]) -> SymmetricPredicate {
    SymmetricPredicate::new(k, s).expect("static predicate")
}

fn dist(m: &[f64]) -> LevelDistribution {
    LevelDistribution::new(m.to_vec()).expect("static distribution")
}

fn close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol
}

fn a1(_: u64) -> (bool, String) {
    let r = alpha(&SymmetricPredicate::two_and());
    let ok = close(r.alpha, 4.0 / 9.0, 1e-6) && r.certified;
    (ok, format!("α(2AND) = {:.9} {}", r.alpha, r.method))
}

fn a2(_: u64) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 2..=6 {
        let want = if k % 2 == 1 { alpha_prime(k) } else { alpha_prime(k + 1).map(|a| 2.0 * a) };
        let Ok(want) = want else { return (false, format!("no closed form for k={k}")) };
        let r = alpha(&SymmetricPredicate::kand(k).expect("k ≥ 1"));
        ok &= close(r.alpha, want, 1e-6) && r.certified;
        parts.push(format!("k={k}: {:.7}", r.alpha));
    }
    (ok, format!("α(kAND) {}", parts.join(", ")))
}

fn a3(_: u64) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [4, 6] {
        let Ok(ap) = alpha_prime(k - 1) else { return (false, format!("no closed form for k={k}")) };
        let r = alpha(&SymmetricPredicate::threshold(k - 1, k).expect("t ≤ k"));
        ok &= close(r.alpha, k as f64 / 2.0 * ap, 1e-6) && r.certified;
        parts.push(format!("k={k}: {:.7}", r.alpha));
    }
    (ok, format!("α(Th^(k-1)_k) {}", parts.join(", ")))
}

fn a4(_: u64) -> (bool, String) {
    let x = alpha(&pred(3, &[2, 3])).alpha;
    let y = alpha(&pred(5, &[3, 4, 5])).alpha;
    let ok = close(x, 0.5 + 3f64.sqrt() / 18.0, 1e-5) && close(y, 0.5 + 3.0 * 5f64.sqrt() / 125.0, 1e-5);
    (ok, format!("α({{2,3}},3) = {x:.7}, α({{3,4,5}},5) = {y:.7}"))
}

/// `f_{{(k+1)/2},k}` evaluated in closed form at its optimal bias.
fn middle_weight_closed_form(k: usize) -> f64 {
    let kf = k as f64;
    let p = (3.0 * kf - kf * kf + (4.0 * kf + kf * kf - 2.0 * kf.powi(3) + kf.powi(4)).sqrt()) / (4.0 * kf);
    let h = (k as i32 + 1) / 2;
    binomial(k, h as usize) as f64
        * ((kf - 1.0) / (2.0 * kf) * (1.0 - p).powi(h) * p.powi(h - 1)
            + (kf + 1.0) / (2.0 * kf) * (1.0 - p).powi(h - 1) * p.powi(h))
}

fn a5(_: u64) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [3, 5] {
        let r = alpha(&pred(k, &[k.div_ceil(2)]));
        ok &= close(r.alpha, middle_weight_closed_form(k), 1e-6);
        parts.push(format!("k={k}: {:.7}", r.alpha));
    }
    (ok, format!("α(f_{{(k+1)/2}},k) {}", parts.join(", ")))
}

fn a6(_: u64) -> (bool, String) {
    let (v, d) = three_and_minimum_check();
    let min_ok = close(v, 2.0 / 9.0, 1e-6) && d.distance(&LevelDistribution::point(3, 2)) <= 1e-4;
    let r = padded_pair_ratio(
        &SymmetricPredicate::kand(3).expect("k=3"),
        &dist(&[0.0, 0.45, 0.45, 0.1]),
        &dist(&[0.45, 0.0, 0.0, 0.55]),
    )
    .unwrap_or(f64::NAN);
    let rejects = !is_padded_onewise_pair(&LevelDistribution::point(3, 2), &dist(&[1.0 / 3.0, 0.0, 0.0, 2.0 / 3.0]));
    let (dn, dy) = (dist(&[0.0, 0.8, 0.2]), dist(&[0.4, 0.0, 0.6]));
    let eta = padded_decomposition(&dn, &dy).map_or(f64::NAN, |p| p.eta);
    let accepts = is_padded_onewise_pair(&dn, &dy) && close(eta, 0.2, 1e-9);
    let ok = min_ok && close(r, 0.2362, 5e-4) && rejects && accepts;
    (ok, format!("3AND min {v:.9}, padded ratio {r:.5}, rejects {rejects}, DiCut η = {eta:.3}"))
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize, max_w: i64) -> Instance {
    let mut inst = Instance::new(n, k);
    for _ in 0..m {
        let vars: Vec<usize> = rand::seq::index::sample(rng, n, k).into_vec();
        let b = rng.gen_range(0..1u32 << k);
        let c = Constraint::new(b, vars, rng.gen_range(1..=max_w)).expect("distinct vars, positive weight");
        inst.push(c).expect("in range");
    }
    inst
}

fn a7(seed: u64) -> (bool, String) {
    let seeds: Vec<u64> = (0..500).map(|i| derive(seed, i)).collect();
    let worst = Exec::Parallel.map(&seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let k = rng.gen_range(2..=4);
        let n = rng.gen_range(k..=12);
        let m = rng.gen_range(1..=40);
        let f = SymmetricPredicate::threshold(rng.gen_range(1..=k), k).expect("t ≤ k");
        let inst = random_instance(&mut rng, n, k, m, 5);
        let b = to_f64(&bias_total(&inst).expect("positive weight"));
        let opt = to_f64(&opt_value(&inst, &f).expect("n ≤ 12").value);
        let lo = beta_mu(&f, b).map_or(f64::NAN, |r| r.value);
        let hi = gamma_mu(&f, b).unwrap_or(f64::NAN);
        // negative slack means a violation
        (opt - lo + 1e-9).min(hi - opt + 1e-9)
    });
    let violations = worst.iter().filter(|s| s.is_nan() || **s < 0.0).count();
    let slack = worst.iter().copied().fold(f64::INFINITY, f64::min);
    (
        violations == 0,
        format!("β(bias) ≤ opt ≤ γ(bias) on 500 instances, {violations} violations, min slack {slack:.3e}"),
    )
}

/// `E[val(x ⊕ a)]` with each `a_i = 1` independently with probability `1 − p`.
fn perturbation_expectation(inst: &Instance, f: &SymmetricPredicate, x: &Assignment, p: f64) -> f64 {
    let n = inst.n();
    (0..1u64 << n)
        .map(|a| {
            let flips = a.count_ones() as i32;
            let pr = p.powi(n as i32 - flips) * (1.0 - p).powi(flips);
            let y = Assignment(x.0.iter().enumerate().map(|(i, &b)| b ^ (a >> i & 1 == 1)).collect());
            pr * to_f64(&inst.value(&y, f).expect("matching n"))
        })
        .sum()
}

fn a8(seed: u64) -> (bool, String) {
    let seeds: Vec<u64> = (0..200).map(|i| derive(seed, i)).collect();
    let errs = Exec::Parallel.map(&seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(k.max(2)..=10);
        let f = loop {
            let s: Vec<usize> = (1..=k).filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() {
                break pred(k, &s);
            }
        };
        let m = rng.gen_range(1..=20);
        let inst = random_instance(&mut rng, n, k, m, 4);
        let x = Assignment((0..n).map(|_| rng.gen_bool(0.5)).collect());
        let p: f64 = rng.gen();
        let d = symmetrize(&TemplateDistribution::of(&inst, &x).expect("matching n"));
        (lambda(&f, &d, p).unwrap_or(f64::NAN) - perturbation_expectation(&inst, &f, &x, p)).abs()
    });
    let worst = errs.iter().copied().fold(0.0, f64::max);
    let ok = errs.iter().all(|e| *e <= 1e-12);
    (ok, format!("λ(Sym(D), p) vs exhaustive expectation on 200 cases, max error {worst:.2e}"))
}

fn random_stream(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<(usize, i64)> {
    (0..len)
        .map(|_| {
            let v = rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (rng.gen_range(0..n), v)
        })
        .collect()
}

fn a9(seed: u64) -> (bool, String) {
    const N: usize = 10_000;
    let (eps, delta) = (0.1, 0.05);
    let seeds: Vec<u64> = (0..200).map(|i| derive(seed, i)).collect();
    let hits = Exec::Parallel.map(&seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let stream = random_stream(&mut rng, N, 200);
        let mut sk = L1Sketch::new(N, eps, delta, s).expect("valid parameters");
        let mut x = vec![0i64; N];
        for &(i, v) in &stream {
            sk.update(i, v).expect("in range");
            x[i] += v;
        }
        let exact: i64 = x.iter().map(|v| v.abs()).sum();
        (sk.estimate() - exact as f64).abs() <= eps * exact as f64
    });
    let freq = hits.iter().filter(|&&h| h).count() as f64 / hits.len() as f64;
    let split_seeds: Vec<u64> = (0..100).map(|i| derive(seed ^ 0x5911, i)).collect();
    let merged = Exec::Parallel.map(&split_seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let stream = random_stream(&mut rng, N, 100);
        let cut = rng.gen_range(0..=stream.len());
        let mut whole = L1Sketch::new(N, eps, delta, s).expect("valid parameters");
        let mut left = whole.zeroed();
        let mut right = whole.zeroed();
        for (t, &(i, v)) in stream.iter().enumerate() {
            whole.update(i, v).expect("in range");
            if t < cut { &mut left } else { &mut right }.update(i, v).expect("in range");
        }
        left.merge(&right).is_ok_and(|m| m.rows() == whole.rows())
    });
    let exact_merges = merged.iter().filter(|&&m| m).count();
    let ok = freq >= 0.9 && exact_merges == merged.len();
    (ok, format!("within (1±ε) in {:.1}% of 200 trials, {exact_merges}/100 merges bit-exact", 100.0 * freq))
}

fn a10(seed: u64) -> (bool, String) {
    let eps = 0.05;
    let preds = [pred(2, &[2]), pred(3, &[3]), pred(4, &[3, 4]), pred(4, &[4]), pred(3, &[2, 3])];
    let seeds: Vec<u64> = (0..60).map(|i| derive(seed, i)).collect();
    let hits = Exec::Parallel.map(&seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let f = &preds[rng.gen_range(0..preds.len())];
        let n = rng.gen_range(f.k().max(4)..=14);
        let m = rng.gen_range(10..=40);
        let inst = random_instance(&mut rng, n, f.k(), m, 5);
        let val = to_f64(&opt_value(&inst, f).expect("n ≤ 14").value);
        let Ok(est) = estimate_value(f, n, inst.constraints(), eps, s) else { return false };
        est.value >= (est.alpha - eps) * val - 1e-12 && est.value <= val + 1e-12
    });
    let freq = hits.iter().filter(|&&h| h).count() as f64 / hits.len() as f64;
    (freq >= 2.0 / 3.0, format!("estimate in [(α−ε)val, val] for {:.1}% of 60 instances", 100.0 * freq))
}

fn a11(seed: u64) -> (bool, String) {
    let seeds: Vec<u64> = (0..2000).map(|i| derive(seed, i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let mut worst = f64::INFINITY;
    for k in [2, 3] {
        let f = SymmetricPredicate::kand(k).expect("k ≥ 1");
        let r = alpha(&f);
        ok &= close(r.p_star, 2.0 / 3.0, 1e-6);
        for _ in 0..5 {
            let inst = random_instance(&mut rng, 10, k, 25, 5);
            let opt = to_f64(&opt_value(&inst, &f).expect("n = 10").value);
            let Ok(mean) = streamcsp_assign::mean_achieved(&inst, &f, &seeds, Exec::Parallel) else {
                return (false, "assignment run failed".into());
            };
            ok &= mean >= (r.alpha - 0.02) * opt;
            worst = worst.min(mean / opt - r.alpha);
        }
    }
    (ok, format!("mean/opt − α ≥ {worst:.4} over 10 instances × 2000 seeds, p* = 2/3"))
}

fn share(flags: &[bool]) -> f64 {
    flags.iter().filter(|&&f| f).count() as f64 / flags.len() as f64
}

fn a12(seed: u64) -> (bool, String) {
    let seeds: Vec<u64> = (0..100).map(|i| derive(seed, i)).collect();
    let cut = SymmetricPredicate::cut();
    let yes_one = Exec::Parallel.map(&seeds, |&s| {
        sbpd_to_maxcut(50, 4, 20, Case::Yes, s).is_ok_and(|doc| {
            let x = &doc.planted.as_ref().expect("generator plants").x;
            doc.instance.value(x, &cut).is_ok_and(|v| v == Q::from_integer(1))
        })
    });
    let seeds = &seeds[..50];
    let no_cut = Exec::Sequential.map(seeds, |&s| {
        sbpd_to_maxcut(50, 4, 20, Case::No, s)
            .ok()
            .and_then(|doc| opt_value(&doc.instance, &cut).ok())
            .map_or(f64::NAN, |o| to_f64(&o.value))
    });
    let dicut_yes = Exec::Parallel.map(seeds, |&s| {
        sbpd_prime_to_maxdicut(50, 8, 40, Case::Yes, s)
            .ok()
            .and_then(|doc| doc.instance.value(&doc.planted.expect("generator plants").x, &doc.predicate).ok())
            .map_or(f64::NAN, |v| to_f64(&v))
    });
    let dicut_no = Exec::Sequential.map(seeds, |&s| {
        sbpd_prime_to_maxdicut(50, 4, 20, Case::No, s)
            .ok()
            .and_then(|doc| opt_value(&doc.instance, &doc.predicate).ok())
            .map_or(f64::NAN, |o| to_f64(&o.value))
    });
    let yes_ok = yes_one.iter().all(|&b| b);
    let cut_share = share(&no_cut.iter().map(|&v| v <= 0.70).collect::<Vec<_>>());
    let dy_share = share(&dicut_yes.iter().map(|&v| close(v, 0.6, 0.05)).collect::<Vec<_>>());
    let dn_share = share(&dicut_no.iter().map(|&v| v <= 0.45).collect::<Vec<_>>());
    let mean_cut = no_cut.iter().sum::<f64>() / no_cut.len() as f64;
    let ok = yes_ok && cut_share >= 0.9 && dy_share >= 0.9 && dn_share >= 0.9;
    let detail = format!(
        "Max-CUT yes planted 1: {yes_ok}; Max-CUT no opt ≤ 0.70: {:.0}% (mean {mean_cut:.3}); \
         DiCut yes ≈ 3/5: {:.0}%; DiCut no opt ≤ 0.45: {:.0}%",
        100.0 * cut_share,
        100.0 * dy_share,
        100.0 * dn_share
    );
    (ok, detail)
}

fn ratio_f64(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn a13(seed: u64) -> (bool, String) {
    let trials = 1_000_000;
    let mut ok = true;
    let mut parts = Vec::new();
    for (i, (l, n, an)) in [(2, 100, 10), (4, 60, 12)].into_iter().enumerate() {
        let exact = h_alpha(l, n, an).ok().and_then(|h| h.to_f64()).unwrap_or(f64::NAN);
        let mc = mc_h_alpha(l, n, an, trials, derive(seed, i), Exec::Parallel).map_or(f64::NAN, |r| ratio_f64(&r));
        let sd = (exact * (1.0 - exact) / trials as f64).sqrt();
        ok &= (mc - exact).abs() <= 3.0 * sd;
        parts.push(format!("h({l},{n},{an}) = {exact:.3e} vs {mc:.3e}"));
    }
    let odd_zero = [1, 3, 5].iter().all(|&l| {
        h_alpha(l, 60, 12).is_ok_and(|h| h.is_zero())
            && mc_h_alpha(l, 60, 12, 20_000, seed, Exec::Parallel).is_ok_and(|r| *r.numer() == 0)
    });
    let n = 10_000;
    let adv = birthday_advantage(n / 10, n, 8 * 100, 2000, derive(seed, 7), Exec::Parallel).unwrap_or(f64::NAN);
    ok &= odd_zero && adv >= 0.3;
    (ok, format!("{}; odd ℓ zero: {odd_zero}; birthday advantage {adv:.3}", parts.join(", ")))
}

fn random_tuples(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|_| rand::seq::index::sample(rng, n, k).into_vec()).collect()
}

fn a14(seed: u64) -> (bool, String) {
    let seeds: Vec<u64> = (0..200).map(|i| derive(seed, i)).collect();
    let refined = Exec::Parallel.map(&seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let pi = if rng.gen_bool(0.5) { OrderingPredicate::mas() } else { OrderingPredicate::btwn() };
        let k = pi.k();
        let n = rng.gen_range(k..=7);
        let q = rng.gen_range(k as u32..=4);
        let m = rng.gen_range(1..=10);
        let psi = QaryInstance { n, q, k, constraints: random_tuples(&mut rng, n, k, m) };
        let Ok(f) = coarsen_predicate(&pi, q) else { return false };
        match (psi.opt_value(&f), refine_instance(&psi).opt_ordvalue(&pi)) {
            (Ok((val, _)), Ok((ordval, _))) => val <= ordval,
            _ => false,
        }
    });
    let held = refined.iter().filter(|&&b| b).count();
    let mas = OrderingPredicate::mas();
    let rho4 = coarsen_predicate(&mas, 4).map(|f| f.rho());
    let omegas = [4u32, 8].iter().all(|&q| {
        coarsen_predicate(&mas, q).is_ok_and(|f| omega_b(&f, &[1, 2]) == Ok(Q::new(q as i128 - 1, q as i128)))
    });
    let rhos = mas.rho() == Q::new(1, 2) && OrderingPredicate::btwn().rho() == Q::new(1, 3);
    let ok = held == 200 && rho4 == Ok(Q::new(3, 8)) && omegas && rhos;
    let rho4 = rho4.map_or("error".to_string(), |r| r.to_string());
    (ok, format!("val ≤ ordval on {held}/200, ρ(MAS↓4) = {rho4}, ω(1,2) = (q−1)/q: {omegas}, ρ(MAS), ρ(Btwn): {rhos}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_seeds_differ() {
        let s: std::collections::HashSet<u64> = (0..1000).map(|i| derive(7, i)).collect();
        assert_eq!(s.len(), 1000);
    }

    #[test]
    fn closed_form_three() {
        // p' = (9 − 9 + √(12 + 9 − 54 + 81))/12 = √48/12 = 1/√3
        let p = 1.0 / 3f64.sqrt();
        let want = 3.0 * (1.0 / 3.0 * (1.0 - p).powi(2) * p + 2.0 / 3.0 * (1.0 - p) * p * p);
        assert!((middle_weight_closed_form(3) - want).abs() < 1e-15);
    }

    #[test]
    fn selection_and_table() {
        let r = run_selected(&["A1", "A14"], 1);
        assert_eq!(r.iter().map(|c| c.id).collect::<Vec<_>>(), ["A1", "A14"]);
        assert!(table(&r).ends_with("criteria passed\n"));
    }
}
