//! Output an assignment, not just a value: set every variable to its
//! majority sign, then keep each bit independently with probability `p*`.
//!
//! For a threshold predicate the expected value of the result is
//! `λ_S(D, p*) ≥ α·γ(bias) ≥ α·opt`, where `D` is the symmetrized template of
//! the majority assignment.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcsp_analysis::{alpha_cached, lambda, symmetrize, AnalysisError};
use streamcsp_core::{to_f64, Assignment, CspError, Exec, Instance, SymmetricPredicate, TemplateDistribution, Q};
use thiserror::Error;

pub use streamcsp_core::majority_assignment;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AssignError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Core(#[from] CspError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

pub type Result<T> = std::result::Result<T, AssignError>;

/// `p_star` is the probability of keeping a bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationPlan {
    pub p_star: f64,
    pub seed: u64,
}

impl PerturbationPlan {
    pub fn new(p_star: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_star) {
            return Err(AssignError::Argument(format!("p* = {p_star} outside [0, 1]")));
        }
        Ok(Self { p_star, seed })
    }
}

pub fn perturb(x: &Assignment, plan: &PerturbationPlan) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    Assignment(x.0.iter().map(|&b| if rng.gen::<f64>() < plan.p_star { b } else { !b }).collect())
}

/// `E[val(x ⊕ a)]` with `a_i = 0` w.p. `p`, in closed form.
pub fn expected_perturbed_value(inst: &Instance, f: &SymmetricPredicate, x: &Assignment, p: f64) -> Result<f64> {
    let d = symmetrize(&TemplateDistribution::of(inst, x)?);
    Ok(lambda(f, &d, p)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub assignment: Assignment,
    pub achieved: Q,
    pub p_star: f64,
    /// False when `p*` came from an uncertified search.
    pub certified: bool,
}

/// `p*` for a threshold predicate, with its certification flag.
pub fn plan_for(f: &SymmetricPredicate, seed: u64) -> Result<(PerturbationPlan, bool)> {
    if f.threshold_t().is_none() {
        return Err(AssignError::Argument(format!("{f} is not a threshold predicate")));
    }
    let r = alpha_cached(f);
    Ok((PerturbationPlan::new(r.p_star, seed)?, r.certified))
}

pub fn run(inst: &Instance, f: &SymmetricPredicate, seed: u64) -> Result<RunResult> {
    if inst.k() != f.k() {
        return Err(AssignError::Argument(format!("instance arity {} != predicate arity {}", inst.k(), f.k())));
    }
    let (plan, certified) = plan_for(f, seed)?;
    let assignment = perturb(&majority_assignment(inst)?, &plan);
    let achieved = inst.value(&assignment, f)?;
    Ok(RunResult { assignment, achieved, p_star: plan.p_star, certified })
}

/// Mean achieved value over `seeds`.
pub fn mean_achieved(inst: &Instance, f: &SymmetricPredicate, seeds: &[u64], exec: Exec) -> Result<f64> {
    if seeds.is_empty() {
        return Err(AssignError::Argument("no seeds".into()));
    }
    let (plan, _) = plan_for(f, 0)?;
    let x = majority_assignment(inst)?;
    let vals = exec.map(seeds, |&seed| {
        let y = perturb(&x, &PerturbationPlan { seed, ..plan });
        inst.value(&y, f).map(|v| to_f64(&v))
    });
    let mut total = 0.0;
    for v in vals {
        total += v?;
    }
    Ok(total / seeds.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use streamcsp_core::Constraint;

    #[test]
    fn extreme_plans() {
        let x = Assignment::parse("1011001").unwrap();
        assert_eq!(perturb(&x, &PerturbationPlan::new(1.0, 3).unwrap()), x);
        let flipped = perturb(&x, &PerturbationPlan::new(0.0, 3).unwrap());
        assert!(flipped.0.iter().zip(&x.0).all(|(a, b)| a != b));
        assert!(PerturbationPlan::new(1.5, 0).is_err());
    }

    #[test]
    fn flip_rate() {
        let n = 100_000;
        let x = Assignment::zeros(n);
        let p = 2.0 / 3.0;
        let flips = perturb(&x, &PerturbationPlan::new(p, 77).unwrap()).0.iter().filter(|&&b| b).count() as f64;
        let sd = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((flips - n as f64 * (1.0 - p)).abs() <= 3.0 * sd);
    }

    #[test]
    fn keep_all_gives_exact_value() {
        let inst = Instance::from_constraints(
            3,
            2,
            [Constraint::new(0b00, vec![0, 1], 2).unwrap(), Constraint::new(0b01, vec![1, 2], 1).unwrap()],
        )
        .unwrap();
        let f = SymmetricPredicate::two_and();
        let x = Assignment::parse("110").unwrap();
        let e = expected_perturbed_value(&inst, &f, &x, 1.0).unwrap();
        assert!((e - to_f64(&inst.value(&x, &f).unwrap())).abs() < 1e-15);
    }

    #[test]
    fn fully_biased_kand() {
        let f = SymmetricPredicate::kand(3).unwrap();
        let inst = Instance::from_constraints(
            6,
            3,
            [Constraint::new(0, vec![0, 1, 2], 1).unwrap(), Constraint::new(0, vec![3, 4, 5], 1).unwrap()],
        )
        .unwrap();
        let x = majority_assignment(&inst).unwrap();
        let p = plan_for(&f, 0).unwrap().0.p_star;
        let e = expected_perturbed_value(&inst, &f, &x, p).unwrap();
        assert!((e - p.powi(3)).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_threshold() {
        let inst = Instance::from_constraints(3, 3, [Constraint::new(0, vec![0, 1, 2], 1).unwrap()]).unwrap();
        assert!(run(&inst, &SymmetricPredicate::new(3, &[2]).unwrap(), 1).is_err());
    }
}
