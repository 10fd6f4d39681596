//! Flat records rendered as `key=value` lines or as JSON with a fixed key
//! order. Floats are rounded to 12 significant digits in both forms.

use serde_json::{Map, Number, Value};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Bool(bool),
    Int(i64),
    Float(f64),
    Floats(Vec<f64>),
    Ints(Vec<usize>),
    Text(String),
    Records(Vec<Report>),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    fields: Vec<(String, Field)>,
}

pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Same digits as the JSON form.
fn float_text(x: f64) -> String {
    float_json(x).to_string()
}

fn float_json(x: f64) -> Value {
    let r = sig12(x);
    Number::from_f64(if r == 0.0 { 0.0 } else { r }).map_or(Value::Null, Value::Number)
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: Field) -> Self {
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn bool(self, key: &str, v: bool) -> Self {
        self.with(key, Field::Bool(v))
    }

    pub fn int(self, key: &str, v: impl Into<i64>) -> Self {
        self.with(key, Field::Int(v.into()))
    }

    pub fn float(self, key: &str, v: f64) -> Self {
        self.with(key, Field::Float(v))
    }

    pub fn text(self, key: &str, v: impl ToString) -> Self {
        self.with(key, Field::Text(v.to_string()))
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            let v = match v {
                Field::Bool(b) => Value::Bool(*b),
                Field::Int(i) => Value::from(*i),
                Field::Float(x) => float_json(*x),
                Field::Floats(xs) => Value::Array(xs.iter().map(|&x| float_json(x)).collect()),
                Field::Ints(xs) => Value::Array(xs.iter().map(|&x| Value::from(x)).collect()),
                Field::Text(s) => Value::String(s.clone()),
                Field::Records(rs) => Value::Array(rs.iter().map(Report::to_json).collect()),
            };
            map.insert(k.clone(), v);
        }
        Value::Object(map)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let v = match v {
                Field::Bool(b) => b.to_string(),
                Field::Int(i) => i.to_string(),
                Field::Float(x) => float_text(*x),
                Field::Floats(xs) => xs.iter().map(|&x| float_text(x)).collect::<Vec<_>>().join(","),
                Field::Ints(xs) => xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                Field::Text(s) => s.clone(),
                Field::Records(rs) => {
                    for r in rs {
                        out.push_str(&r.to_text());
                    }
                    continue;
                }
            };
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => format!("{}\n", self.to_json()),
        }
    }
}
