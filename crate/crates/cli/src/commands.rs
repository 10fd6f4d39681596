use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use streamcsp_analysis::{alpha, beta_dist, beta_mu, gamma_dist, gamma_mu, lambda, mu, LevelDistribution, Method};
use streamcsp_core::format::{self as core_format, parse_constraint, Document, Planted};
use streamcsp_core::{opt_value, to_f64, Assignment, Exec, Instance, SymmetricPredicate};
use streamcsp_hardgen::{sbpd_prime_to_maxdicut, sbpd_to_maxcut, sirsd_to_csp, QaryPredicate};
use streamcsp_ocsp::format::{self as ocsp_format, OrderingDocument, PlantedOrder};
use streamcsp_ocsp::{gen_ocsp_hard, OrderingPredicate};
use streamcsp_sketch::ValueEstimator;

use crate::args::{AnalyzeArgs, AssignArgs, EstimateArgs, Format, GenArgs, GenKind, PredicateArgs, ReproArgs};
use crate::battery;
use crate::error::{CliError, Result};
use crate::report::{Field, Report};

/// Exit status for an uncertified numeric threshold.
pub const EXIT_NUMERIC_ONLY: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

fn open<'a>(path: Option<&Path>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).map_err(|source| CliError::Input { path: p.display().to_string(), source })?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(stdin)),
    }
}

fn read_all(path: Option<&Path>, stdin: &mut dyn BufRead) -> Result<String> {
    let mut text = String::new();
    let name = path.map_or("stdin".to_string(), |p| p.display().to_string());
    open(path, stdin)?.read_to_string(&mut text).map_err(|source| CliError::Input { path: name, source })?;
    Ok(text)
}

fn predicate(p: &PredicateArgs) -> Result<SymmetricPredicate> {
    Ok(SymmetricPredicate::new(p.k, &p.s)?)
}

pub fn cmd_alpha(p: &PredicateArgs, format: Format) -> Result<Outcome> {
    let f = predicate(p)?;
    let r = alpha(&f);
    let report = Report::new()
        .with("S", Field::Ints(r.s.clone()))
        .int("k", r.k as i64)
        .float("alpha", r.alpha)
        .with("d_star", Field::Floats(r.d_star.masses().to_vec()))
        .float("p_star", r.p_star)
        .bool("certified", r.certified)
        .text("method", r.method);
    let code = if r.method == Method::NumericOnly { EXIT_NUMERIC_ONLY } else { 0 };
    Ok(Outcome { body: report.render(format), code })
}

pub fn cmd_analyze(a: &AnalyzeArgs, format: Format) -> Result<Outcome> {
    let f = predicate(&a.predicate)?;
    if a.dist.len() != f.k() + 1 {
        return usage(format!("--dist needs k+1 = {} masses, got {}", f.k() + 1, a.dist.len()));
    }
    let d = LevelDistribution::new(a.dist.clone())?;
    let m = mu(&d);
    let (beta, p_max) = beta_dist(&f, &d)?;
    let mut report = Report::new()
        .with("S", Field::Ints(f.s().to_vec()))
        .int("k", f.k() as i64)
        .with("dist", Field::Floats(d.masses().to_vec()))
        .float("mu", m)
        .float("gamma", gamma_dist(&f, &d)?)
        .float("beta", beta)
        .float("p_max", p_max)
        .float("gamma_mu", gamma_mu(&f, m)?)
        .float("beta_mu", beta_mu(&f, m)?.value);
    if let Some(p) = a.p {
        report = report.float("p", p).float("lambda", lambda(&f, &d, p)?);
    }
    Ok(Outcome::ok(report.render(format)))
}

fn parse_bits(s: &str) -> Result<Vec<u32>> {
    s.chars()
        .filter(|&c| c != ',')
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => usage(format!("--b must be a bit string, got {s:?}")),
        })
        .collect()
}

fn parse_digits(s: &str) -> Result<Vec<u32>> {
    s.split(',').map(|d| d.trim().parse().or_else(|_| usage(format!("bad --b digit {d:?}")))).collect()
}

/// Generated instances are written as text regardless of `--format`.
pub fn cmd_gen(g: &GenArgs) -> Result<Outcome> {
    let text = match g.kind {
        GenKind::Maxcut => core_format::write(&sbpd_to_maxcut(g.t, g.alpha_n, g.n, g.case, g.seed)?),
        GenKind::Maxdicut => core_format::write(&sbpd_prime_to_maxdicut(g.t, g.alpha_n, g.n, g.case, g.seed)?),
        GenKind::Csp => {
            let (Some(k), Some(s)) = (g.k, g.s.as_ref()) else {
                return usage("gen csp needs --k and --S");
            };
            if g.q.is_some_and(|q| q != 2) {
                return usage("gen csp writes Boolean instances; use --q 2 or omit it");
            }
            let f = SymmetricPredicate::new(k, s)?;
            let b = match &g.b {
                Some(b) => parse_bits(b)?,
                None => (0..k).map(|i| u32::from(i < f.max_s())).collect(),
            };
            let gen = sirsd_to_csp(&QaryPredicate::from_symmetric(&f), &b, g.t, g.alpha_n, g.n, g.case, g.seed)?;
            let x = Assignment(gen.x_star.iter().map(|&v| v == 1).collect());
            core_format::write(&Document {
                instance: gen.instance.to_boolean()?,
                predicate: f,
                planted: Some(Planted { x, case: g.case, seed: g.seed }),
            })
        }
        GenKind::Ocsp => {
            let pi = OrderingPredicate::parse(&g.pred)?;
            let q = g.q.unwrap_or(8);
            let b = match &g.b {
                Some(b) => parse_digits(b)?,
                None => pi.accepted().next().expect("non-empty").iter().map(|&r| r as u32).collect(),
            };
            let gen = gen_ocsp_hard(&pi, &b, q, g.t, g.alpha_n, g.n, g.case, g.seed)?;
            ocsp_format::write(&OrderingDocument {
                instance: gen.instance,
                predicate: pi,
                planted: Some(PlantedOrder { sigma: gen.sigma_star, case: g.case, seed: g.seed }),
            })
        }
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_estimate(e: &EstimateArgs, format: Format, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let (est, m) = match (e.n, e.k, &e.s) {
        (Some(n), Some(k), Some(s)) => {
            let f = SymmetricPredicate::new(k, s)?;
            let mut est = ValueEstimator::with_confidence(&f, n, e.eps, e.delta, e.seed)?;
            let mut m = 0usize;
            let name = e.input.as_ref().map_or("stdin".to_string(), |p| p.display().to_string());
            for (i, line) in open(e.input.as_deref(), stdin)?.lines().enumerate() {
                let line = line.map_err(|source| CliError::Input { path: name.clone(), source })?;
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                if e.m.is_some_and(|cap| m >= cap) {
                    break;
                }
                est.feed(&parse_constraint(line, k, n, i + 1)?)?;
                m += 1;
            }
            (est, m)
        }
        (None, None, None) => {
            let doc = core_format::parse(&read_all(e.input.as_deref(), stdin)?)?;
            let inst = &doc.instance;
            let mut est = ValueEstimator::with_confidence(&doc.predicate, inst.n(), e.eps, e.delta, e.seed)?;
            est.feed_all(inst.constraints(), Exec::Parallel)?;
            (est, inst.m())
        }
        _ => return usage("stream mode needs all of --n, --k and --S"),
    };
    if m == 0 {
        return Err(CliError::Data("no constraints".into()));
    }
    let v = est.finish()?;
    let report = Report::new()
        .float("value", v.value)
        .float("bias_hat", v.bias_hat)
        .float("alpha", v.alpha)
        .float("eps", e.eps)
        .float("accuracy", v.delta)
        .float("delta", e.delta)
        .int("m", m as i64)
        .text("seed", e.seed);
    Ok(Outcome::ok(report.render(format)))
}

fn read_doc(path: Option<&Path>, stdin: &mut dyn BufRead) -> Result<Document> {
    Ok(core_format::parse(&read_all(path, stdin)?)?)
}

pub fn cmd_assign(a: &AssignArgs, format: Format, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let doc = read_doc(a.input.as_deref(), stdin)?;
    let r = streamcsp_assign::run(&doc.instance, &doc.predicate, a.seed)?;
    let report = Report::new()
        .text("assignment", &r.assignment)
        .text("value", r.achieved)
        .float("p_star", r.p_star)
        .bool("certified", r.certified)
        .text("seed", a.seed);
    Ok(Outcome::ok(report.render(format)))
}

pub fn solve_document(doc: &Document) -> Result<Report> {
    let inst: &Instance = &doc.instance;
    let opt = opt_value(inst, &doc.predicate)?;
    Ok(Report::new()
        .text("value", opt.value)
        .float("value_decimal", to_f64(&opt.value))
        .int("satisfied_weight", opt.satisfied_weight)
        .int("total_weight", inst.total_weight())
        .text("witness", &opt.witness))
}

pub fn cmd_solve(input: Option<&Path>, format: Format, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let doc = read_doc(input, stdin)?;
    Ok(Outcome::ok(solve_document(&doc)?.render(format)))
}

pub fn cmd_ordsolve(input: Option<&Path>, format: Format, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let doc = ocsp_format::parse(&read_all(input, stdin)?)?;
    let (value, sigma) = doc.instance.opt_ordvalue(&doc.predicate)?;
    let report =
        Report::new().text("value", value).float("value_decimal", to_f64(&value)).with("sigma", Field::Ints(sigma));
    Ok(Outcome::ok(report.render(format)))
}

pub fn cmd_repro(r: &ReproArgs, format: Format) -> Result<Outcome> {
    let ids: Vec<&str> = r.only.iter().map(String::as_str).collect();
    for id in &ids {
        if !battery::IDS.contains(id) {
            return usage(format!("unknown criterion {id:?}"));
        }
    }
    let results = battery::run_selected(&ids, r.seed);
    let failed = results.iter().any(|c| !c.passed);
    let body = match format {
        Format::Text => battery::table(&results),
        Format::Json => {
            let rows = results.iter().map(battery::Criterion::report).collect();
            Report::new().bool("passed", !failed).with("criteria", Field::Records(rows)).render(format)
        }
    };
    Ok(Outcome { body, code: i32::from(failed) })
}
