//! Text form: a header `ocsp k=<k> n=<n> m=<m> pred=<mas|btwn|perms>`, then
//! one constraint per line as 1-based indices. Blank lines and `#` comments
//! are skipped; a trailer `# planted <σ> case <yes|no> seed <u64>` records a
//! planted order.

use std::fmt::Write;

use streamcsp_core::Case;

use crate::error::{OcspError, Result};
use crate::instance::OrderingInstance;
use crate::perm::{is_permutation, OrderingPredicate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedOrder {
    pub sigma: Vec<usize>,
    pub case: Case,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingDocument {
    pub instance: OrderingInstance,
    pub predicate: OrderingPredicate,
    pub planted: Option<PlantedOrder>,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(OcspError::Parse { line, msg: msg.into() })
}

fn field<'a>(tok: &'a str, key: &str, line: usize) -> Result<&'a str> {
    tok.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .map_or_else(|| perr(line, format!("expected {key}=…, got {tok:?}")), Ok)
}

fn number(s: &str, line: usize) -> Result<usize> {
    s.parse().or_else(|_| perr(line, format!("bad number {s:?}")))
}

fn parse_planted(rest: &str, n: usize, line: usize) -> Result<PlantedOrder> {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    if toks.len() != 5 || toks[1] != "case" || toks[3] != "seed" {
        return perr(line, "expected `# planted <σ> case <yes|no> seed <u64>`");
    }
    let sigma: Vec<usize> = toks[0].split(',').map(|s| number(s, line)).collect::<Result<_>>()?;
    if sigma.len() != n || !is_permutation(&sigma) {
        return perr(line, "planted order is not a permutation of 1..=n");
    }
    let case = toks[2].parse().or_else(|_| perr(line, format!("bad case {:?}", toks[2])))?;
    let seed = toks[4].parse().or_else(|_| perr(line, format!("bad seed {:?}", toks[4])))?;
    Ok(PlantedOrder { sigma, case, seed })
}

pub fn parse(text: &str) -> Result<OrderingDocument> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let Some((hl, header)) = lines.by_ref().find(|(_, l)| !l.starts_with('#')) else {
        return perr(1, "missing header");
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "ocsp" {
        return perr(hl, "expected `ocsp k=<k> n=<n> m=<m> pred=<…>`");
    }
    let k = number(field(toks[1], "k", hl)?, hl)?;
    let n = number(field(toks[2], "n", hl)?, hl)?;
    let m = number(field(toks[3], "m", hl)?, hl)?;
    let predicate = OrderingPredicate::parse(field(toks[4], "pred", hl)?).or_else(|e| perr(hl, e.to_string()))?;
    if predicate.k() != k {
        return perr(hl, format!("predicate arity {} != k = {k}", predicate.k()));
    }
    let mut instance = OrderingInstance::new(n, k);
    let mut planted = None;
    for (ln, l) in lines {
        if let Some(c) = l.strip_prefix('#') {
            if let Some(rest) = c.trim().strip_prefix("planted") {
                planted = Some(parse_planted(rest, n, ln)?);
            }
            continue;
        }
        let idx: Vec<usize> = l.split_whitespace().map(|s| number(s, ln)).collect::<Result<_>>()?;
        if idx.contains(&0) {
            return perr(ln, "indices are 1-based");
        }
        instance.push(idx.iter().map(|v| v - 1).collect()).or_else(|e| perr(ln, e.to_string()))?;
    }
    if instance.m() != m {
        return perr(hl, format!("header says m={m}, found {} constraints", instance.m()));
    }
    Ok(OrderingDocument { instance, predicate, planted })
}

pub fn write(doc: &OrderingDocument) -> String {
    let inst = &doc.instance;
    let mut out = format!("ocsp k={} n={} m={} pred={}\n", inst.k, inst.n, inst.m(), doc.predicate.label());
    for j in &inst.constraints {
        let idx: Vec<String> = j.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&idx.join(" "));
        out.push('\n');
    }
    if let Some(p) = &doc.planted {
        let s: Vec<String> = p.sigma.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "# planted {} case {} seed {}", s.join(","), p.case, p.seed);
    }
    out
}
