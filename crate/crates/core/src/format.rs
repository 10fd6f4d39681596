//! Plain-text instance format.
//!
//! ```text
//! mbcsp k=2 n=3 m=2 S=2
//! 00 1 2 1
//! # comment
//! 01 2 3 4
//! ```
//!
//! Each constraint line is the negation pattern, `k` one-based indices and a
//! positive weight. Generators append `# planted <bits> case <yes|no> seed <u64>`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{CspError, Result};
use crate::instance::{Assignment, Constraint, Instance};
use crate::predicate::SymmetricPredicate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Yes,
    No,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Yes => "yes",
            Case::No => "no",
        })
    }
}

impl FromStr for Case {
    type Err = CspError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" | "Yes" | "YES" => Ok(Case::Yes),
            "no" | "No" | "NO" => Ok(Case::No),
            _ => Err(CspError::Argument(format!("case must be yes or no, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planted {
    pub x: Assignment,
    pub case: Case,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub instance: Instance,
    pub predicate: SymmetricPredicate,
    pub planted: Option<Planted>,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(CspError::Parse { line, msg: msg.into() })
}

fn header_field<'a>(tok: Option<&'a str>, key: &str, line: usize) -> Result<&'a str> {
    match tok.and_then(|t| t.strip_prefix(key)).and_then(|t| t.strip_prefix('=')) {
        Some(v) => Ok(v),
        None => perr(line, format!("expected {key}=<value> in header")),
    }
}

fn num<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse().or_else(|_| perr(line, format!("bad {what} {s:?}")))
}

pub fn parse_weight_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|w| w.trim().parse::<usize>().map_err(|_| CspError::Argument(format!("bad weight {w:?}"))))
        .collect()
}

/// Parse one constraint line (already stripped of comments) against arity `k`
/// and `n` variables.
pub fn parse_constraint(text: &str, k: usize, n: usize, line: usize) -> Result<Constraint> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != k + 2 {
        return perr(line, format!("expected {} fields, found {}", k + 2, toks.len()));
    }
    let bits = toks[0];
    if bits.len() != k || !bits.bytes().all(|c| c == b'0' || c == b'1') {
        return perr(line, format!("negation pattern {bits:?} is not {k} bits"));
    }
    let b: Vec<bool> = bits.bytes().map(|c| c == b'1').collect();
    let mut j = Vec::with_capacity(k);
    for t in &toks[1..=k] {
        let v: usize = num(t, line, "index")?;
        if v == 0 || v > n {
            return perr(line, format!("index {v} outside 1..={n}"));
        }
        j.push(v - 1);
    }
    let w: i64 = num(toks[k + 1], line, "weight")?;
    Constraint::from_bits(&b, j, w).or_else(|e| perr(line, e.to_string()))
}

fn parse_planted(rest: &str, n: usize, line: usize) -> Result<Planted> {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    if toks.len() != 5 || toks[1] != "case" || toks[3] != "seed" {
        return perr(line, "malformed planted trailer");
    }
    let x = Assignment::parse(toks[0]).or_else(|e| perr(line, e.to_string()))?;
    if x.len() != n {
        return perr(line, format!("planted assignment has length {} != n = {n}", x.len()));
    }
    let case = toks[2].parse().or_else(|e: CspError| perr(line, e.to_string()))?;
    Ok(Planted { x, case, seed: num(toks[4], line, "seed")? })
}

pub fn parse(text: &str) -> Result<Document> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = loop {
        match lines.next() {
            None => return perr(0, "missing header"),
            Some((_, l)) if l.is_empty() || l.starts_with('#') => continue,
            Some(h) => break h,
        }
    };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("mbcsp") {
        return perr(hline, "header must start with `mbcsp`");
    }
    let k: usize = num(header_field(toks.next(), "k", hline)?, hline, "k")?;
    let n: usize = num(header_field(toks.next(), "n", hline)?, hline, "n")?;
    let m: usize = num(header_field(toks.next(), "m", hline)?, hline, "m")?;
    let s = parse_weight_list(header_field(toks.next(), "S", hline)?).or_else(|e| perr(hline, e.to_string()))?;
    if toks.next().is_some() {
        return perr(hline, "trailing header fields");
    }
    let predicate = SymmetricPredicate::new(k, &s).or_else(|e| perr(hline, e.to_string()))?;
    let mut instance = Instance::new(n, k);
    let mut planted = None;
    for (no, l) in lines {
        if l.is_empty() {
            continue;
        }
        if let Some(c) = l.strip_prefix('#') {
            if let Some(rest) = c.trim_start().strip_prefix("planted ") {
                planted = Some(parse_planted(rest, n, no)?);
            }
            continue;
        }
        let c = parse_constraint(l, k, n, no)?;
        instance.push(c).or_else(|e| perr(no, e.to_string()))?;
    }
    if instance.m() != m {
        return perr(hline, format!("header declares m = {m}, found {} constraints", instance.m()));
    }
    Ok(Document { instance, predicate, planted })
}

pub fn write_constraint(out: &mut String, c: &Constraint) {
    for t in 0..c.k() {
        out.push(if c.b_bit(t) { '1' } else { '0' });
    }
    for v in &c.j {
        let _ = write!(out, " {}", v + 1);
    }
    let _ = writeln!(out, " {}", c.w);
}

pub fn write(doc: &Document) -> String {
    let inst = &doc.instance;
    let mut out = format!("mbcsp k={} n={} m={} S={}\n", inst.k(), inst.n(), inst.m(), doc.predicate.label());
    for c in inst.constraints() {
        write_constraint(&mut out, c);
    }
    if let Some(p) = &doc.planted {
        let _ = writeln!(out, "# planted {} case {} seed {}", p.x, p.case, p.seed);
    }
    out
}
