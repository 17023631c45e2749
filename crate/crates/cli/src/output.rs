//! Report rendering and the exit-code contract.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Violation,
    Inconclusive,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if self.code() >= other.code() {
            self
        } else {
            other
        }
    }
}

pub const INVALID_CONFIG: i32 = 2;

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

/// A finished command: summary line, JSON body and a flat table.
pub struct Report {
    pub command: String,
    pub status: Status,
    pub summary: String,
    pub body: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &str, status: Status, summary: String, body: Value) -> Self {
        Report {
            command: command.to_string(),
            status,
            summary,
            body,
            header: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "status": self.status.tag(),
                    "summary": self.summary,
                    "report": fixed_floats(self.body.clone()),
                });
                serde_json::to_string_pretty(&v).expect("json renders") + "\n"
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Human => {
                let mut out = format!("{} [{}]\n", self.summary, self.status.tag());
                if self.header.is_empty() {
                    return out;
                }
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].len())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                out += &line(self.header.clone());
                for r in &self.rows {
                    out += &line(r.iter().map(String::as_str).collect());
                }
                out
            }
        }
    }
}

/// Replaces every non-integer JSON number by its 17-digit string.
fn fixed_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => Value::String(fmt_f64(n.as_f64().expect("f64"))),
        Value::Array(a) => Value::Array(a.into_iter().map(fixed_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, fixed_floats(v))).collect()),
        v => v,
    }
}

pub fn error_kind(e: &qbias::Error) -> &'static str {
    use qbias::Error::*;
    match e {
        DomainMismatch { .. } => "domain_mismatch",
        OrderMismatch { .. } => "order_mismatch",
        SingularSeries(_) => "singular_series",
        InvalidParameter(_) => "invalid_parameter",
        CapExceeded { .. } => "cap_exceeded",
        Hypothesis(_) => "hypothesis",
        TailBound { .. } => "tail_bound",
        Parse(_) => "parse",
    }
}

pub fn write_error(err: &mut dyn Write, kind: &str, message: &str) {
    let v = json!({ "error": kind, "message": message });
    let _ = writeln!(err, "{v}");
}
