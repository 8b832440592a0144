//! The frame file format: JSON with `dimension`, `vectors` and an optional
//! `label`, every quaternion written as `[x0, x1, x2, x3]`.

use std::fmt::Write as _;
use std::path::Path;

use qframe::{Frame, QVector, Quaternion};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub dimension: usize,
    pub vectors: Vec<Vec<[f64; 4]>>,
    #[serde(default)]
    pub label: Option<String>,
}

impl FrameFile {
    pub fn from_frame(frame: &Frame, label: Option<String>) -> Self {
        Self::from_vectors(frame.dim(), frame.vectors(), label)
    }

    pub fn from_vectors(dimension: usize, vectors: &[QVector], label: Option<String>) -> Self {
        let vectors = vectors.iter().map(|v| v.iter().map(|q| q.to_array()).collect()).collect();
        Self { dimension, vectors, label }
    }

    /// Checks the invariants serde cannot: `n ≥ 1`, `m ≥ 1`, every vector of
    /// length `n`, every component finite.
    pub fn validate(&self) -> Result<(), String> {
        if self.dimension == 0 {
            return Err("dimension must be at least 1".into());
        }
        if self.vectors.is_empty() {
            return Err("at least one vector is required".into());
        }
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != self.dimension {
                return Err(format!("vector {i} has {} entries, expected {}", v.len(), self.dimension));
            }
            if v.iter().flatten().any(|x| !x.is_finite()) {
                return Err(format!("vector {i} has a non-finite component"));
            }
        }
        Ok(())
    }

    pub fn to_vectors(&self) -> Vec<QVector> {
        self.vectors
            .iter()
            .map(|v| {
                let entries = v.iter().map(|&q| Quaternion::from_array(q).expect("validated")).collect();
                QVector::new(entries).expect("validated")
            })
            .collect()
    }

    pub fn to_frame(&self) -> Result<Frame, CliError> {
        Ok(Frame::new(self.to_vectors())?)
    }

    /// One vector per line. Numbers use the shortest representation that
    /// parses back to the same `f64`.
    pub fn emit(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"dimension\": {},", self.dimension);
        if let Some(label) = &self.label {
            let _ = writeln!(out, "  \"label\": {},", serde_json::to_string(label).expect("strings serialize"));
        }
        out.push_str("  \"vectors\": [\n");
        for (i, v) in self.vectors.iter().enumerate() {
            out.push_str("    [");
            for (j, q) in v.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push('[');
                for (k, x) in q.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&number(*x));
                }
                out.push(']');
            }
            out.push(']');
            if i + 1 < self.vectors.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]\n}\n");
        out
    }
}

fn number(x: f64) -> String {
    serde_json::Number::from_f64(x).expect("finite").to_string()
}

pub fn parse_frame_str(text: &str, path: &Path) -> Result<FrameFile, CliError> {
    let file: FrameFile = serde_json::from_str(text).map_err(|e| CliError::Schema {
        path: path.to_owned(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate().map_err(|message| CliError::Schema { path: path.to_owned(), line: 0, column: 0, message })?;
    Ok(file)
}

/// Reads and validates a frame file, returning it with its raw bytes.
pub fn read_frame_file(path: &Path) -> Result<(FrameFile, Vec<u8>), CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Schema {
        path: path.to_owned(),
        line: 0,
        column: 0,
        message: format!("not UTF-8: {e}"),
    })?;
    let file = parse_frame_str(text, path)?;
    Ok((file, bytes))
}

pub fn parse_frame_file(path: &Path) -> Result<Frame, CliError> {
    read_frame_file(path)?.0.to_frame()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<FrameFile, CliError> {
        parse_frame_str(text, Path::new("test.json"))
    }

    #[test]
    fn orthonormal_basis_of_h2() {
        let f = parse(r#"{"dimension": 2, "vectors": [[[1,0,0,0],[0,0,0,0]], [[0,0,0,0],[1,0,0,0]]]}"#).unwrap();
        let frame = f.to_frame().unwrap();
        assert_eq!(frame.vectors()[0], QVector::basis(2, 0));
        assert_eq!(frame.vectors()[1], QVector::basis(2, 1));
        assert!(frame.bounds().is_parseval);
    }

    #[test]
    fn three_component_quaternion_is_a_schema_error() {
        let err = parse(r#"{"dimension": 1, "vectors": [[[1,0,0]]]}"#).unwrap_err();
        match err {
            CliError::Schema { line, column, .. } => assert_eq!((line, column), (1, 37)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn semantic_violations() {
        assert!(parse(r#"{"dimension": 0, "vectors": [[]]}"#).is_err());
        assert!(parse(r#"{"dimension": 2, "vectors": []}"#).is_err());
        assert!(parse(r#"{"dimension": 2, "vectors": [[[1,0,0,0]]]}"#).is_err());
        assert!(parse(r#"{"dimension": 1, "vectors": [[[1e999,0,0,0]]]}"#).is_err());
        assert!(parse(r#"{"dimension": 1, "vectors": [[[1,0,0,0]]], "extra": 1}"#).is_err());
    }

    #[test]
    fn emit_round_trips_bit_for_bit() {
        let odd = [0.1, -1.0 / 3.0, 1e-300, 123456789.12345679];
        let f = FrameFile { dimension: 1, vectors: vec![vec![odd], vec![[f64::MIN_POSITIVE, -0.0, 2.5, 1e300]]], label: Some("a \"b\"".into()) };
        let text = f.emit();
        let back = parse(&text).unwrap();
        assert_eq!(back.label, f.label);
        for (a, b) in back.vectors.iter().flatten().flatten().zip(f.vectors.iter().flatten().flatten()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        assert_eq!(back.emit(), text);
    }
}
