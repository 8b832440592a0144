use std::collections::BTreeMap;
use std::fmt::Write as _;

use qframe::FrameBounds;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "qframe";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// Passes when `residual ≤ tolerance`.
    AtMost,
    /// Passes when `residual > tolerance`.
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Input {
    pub role: String,
    pub sha256: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Flags {
    pub is_frame: bool,
    pub is_bessel: bool,
    pub is_tight: bool,
    pub is_parseval: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<Input>,
    pub dimension: usize,
    pub vectors: usize,
    pub bounds: Bounds,
    pub flags: Flags,
    /// Informational numbers that carry no verdict.
    pub values: BTreeMap<String, f64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_dual: Option<Vec<Vec<[f64; 4]>>>,
    pub passed: bool,
    pub timing_ms: f64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl ReportDocument {
    pub fn new(command: &str, dimension: usize, vectors: usize, bounds: &FrameBounds) -> Self {
        Self {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            inputs: Vec::new(),
            dimension,
            vectors,
            bounds: Bounds { lower: bounds.lower, upper: bounds.upper },
            flags: Flags {
                is_frame: bounds.is_frame,
                is_bessel: bounds.is_bessel,
                is_tight: bounds.is_tight,
                is_parseval: bounds.is_parseval,
            },
            values: BTreeMap::new(),
            checks: Vec::new(),
            canonical_dual: None,
            passed: true,
            timing_ms: 0.0,
        }
    }

    pub fn input(&mut self, role: &str, bytes: &[u8]) {
        self.inputs.push(Input { role: role.into(), sha256: sha256_hex(bytes) });
    }

    pub fn value(&mut self, key: &str, value: f64) {
        self.values.insert(key.into(), value);
    }

    pub fn check(&mut self, name: &str, residual: f64, tolerance: f64) {
        self.push(name, residual, tolerance, Comparison::AtMost);
    }

    pub fn check_above(&mut self, name: &str, value: f64, threshold: f64) {
        self.push(name, value, threshold, Comparison::Above);
    }

    /// A boolean verdict with no natural residual: recorded as 0 or 1
    /// against tolerance 0.
    pub fn check_flag(&mut self, name: &str, ok: bool) {
        self.push(name, if ok { 0.0 } else { 1.0 }, 0.0, Comparison::AtMost);
    }

    fn push(&mut self, name: &str, residual: f64, tolerance: f64, comparison: Comparison) {
        let pass = match comparison {
            Comparison::AtMost => residual <= tolerance,
            Comparison::Above => residual > tolerance,
        };
        self.passed &= pass;
        self.checks.push(Check { name: name.into(), residual, tolerance, comparison, pass });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flat `key = value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{k} = {v}");
        };
        line("tool", &self.tool);
        line("version", &self.version);
        line("command", &self.command);
        for input in &self.inputs {
            line(&format!("input.{}.sha256", input.role), &input.sha256);
        }
        line("dimension", &self.dimension);
        line("vectors", &self.vectors);
        line("bounds.lower", &num(self.bounds.lower));
        line("bounds.upper", &num(self.bounds.upper));
        line("flags.is_frame", &self.flags.is_frame);
        line("flags.is_bessel", &self.flags.is_bessel);
        line("flags.is_tight", &self.flags.is_tight);
        line("flags.is_parseval", &self.flags.is_parseval);
        for (k, v) in &self.values {
            line(&format!("value.{k}"), &num(*v));
        }
        if let Some(dual) = &self.canonical_dual {
            for (i, v) in dual.iter().enumerate() {
                let entries: Vec<String> = v
                    .iter()
                    .map(|q| format!("[{}]", q.iter().map(|x| num(*x)).collect::<Vec<_>>().join(", ")))
                    .collect();
                line(&format!("canonical_dual.{i}"), &format!("[{}]", entries.join(", ")));
            }
        }
        for c in &self.checks {
            let op = match c.comparison {
                Comparison::AtMost => "<=",
                Comparison::Above => ">",
            };
            line(
                &format!("check.{}", c.name),
                &format!("{} ({} {op} {})", if c.pass { "pass" } else { "fail" }, num(c.residual), num(c.tolerance)),
            );
        }
        line("verdict", &if self.passed { "pass" } else { "fail" });
        line("timing_ms", &format!("{:.3}", self.timing_ms));
        out
    }
}

fn num(x: f64) -> String {
    if x == 0.0 || (1e-4..1e6).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn number_formatting() {
        assert_eq!(num(2.0), "2");
        assert_eq!(num(0.5), "0.5");
        assert_eq!(num(1e-9), "1e-9");
        assert_eq!(num(3.5e-16), "3.5e-16");
        assert_eq!(num(0.0), "0");
    }

    #[test]
    fn verdicts_fold_into_passed() {
        let b = qframe::Frame::new(vec![qframe::QVector::basis(1, 0)]).unwrap().bounds();
        let mut r = ReportDocument::new("bounds", 1, 1, &b);
        r.check("a", 1e-12, 1e-9);
        r.check_above("b", 1.0, 1e-9);
        assert!(r.passed);
        r.check_flag("c", false);
        assert!(!r.passed);
        assert!(r.to_text().contains("check.c = fail (1 <= 0)\n"));
    }
}
