//! Machine-readable output: one [`OutputRecord`] per command, rendered as
//! JSON or TSV. Exact values travel as fraction strings, never floats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::One;
use outstanding::{GeomForm, Polynomial, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: String,
    pub inputs: BTreeMap<String, String>,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    /// Ascending coefficients, degree 0 first.
    Coefficients(Vec<String>),
    Scalar(String),
    Boolean(bool),
    GeomForm {
        numerator: Vec<String>,
        pole_order: usize,
    },
    Report {
        passed: bool,
        suites: Vec<SuiteRow>,
    },
    Fields(BTreeMap<String, String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub suite: String,
    pub cases: usize,
    pub failed: usize,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("TSV line {line}: {reason}")]
    Tsv { line: usize, reason: String },
}

/// `p/q` in lowest terms; integers print as `p/1`.
pub fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Coefficient list with an explicit degree-0 entry, even for zero.
pub fn coefficients(p: &Polynomial) -> Vec<String> {
    if p.is_zero() {
        return vec![fraction(&Rational::from_integer(0.into()))];
    }
    p.coeffs().iter().map(fraction).collect()
}

impl Payload {
    pub fn polynomial(p: &Polynomial) -> Self {
        Payload::Coefficients(coefficients(p))
    }

    pub fn scalar(q: &Rational) -> Self {
        Payload::Scalar(fraction(q))
    }

    pub fn integer(n: &outstanding::Integer) -> Self {
        Payload::scalar(&Rational::new(n.clone(), One::one()))
    }

    pub fn geom_form(f: &GeomForm) -> Self {
        Payload::GeomForm {
            numerator: coefficients(f.numerator()),
            pole_order: f.pole_order(),
        }
    }
}

impl OutputRecord {
    pub fn new(kind: impl Into<String>, inputs: &[(&str, String)], payload: Payload) -> Self {
        Self {
            kind: kind.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Comment lines `# kind=...` and `# input.<name>=...`, then a header row
    /// and one or more value rows, tab separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# kind={}", self.kind).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "# input.{k}={v}").unwrap();
        }
        let (header, rows) = match &self.payload {
            Payload::Coefficients(c) => (degree_header(c.len()), vec![c.clone()]),
            Payload::Scalar(s) => (vec!["value".into()], vec![vec![s.clone()]]),
            Payload::Boolean(b) => (vec!["value".into()], vec![vec![b.to_string()]]),
            Payload::GeomForm { numerator, pole_order } => {
                let mut header = vec!["pole_order".to_string()];
                header.extend(degree_header(numerator.len()));
                let mut row = vec![pole_order.to_string()];
                row.extend(numerator.iter().cloned());
                (header, vec![row])
            }
            Payload::Report { suites, .. } => (
                REPORT_HEADER.iter().map(|s| s.to_string()).collect(),
                suites
                    .iter()
                    .map(|s| {
                        vec![
                            s.suite.clone(),
                            s.cases.to_string(),
                            s.failed.to_string(),
                            s.passed.to_string(),
                            s.counterexamples.join(" ;; "),
                        ]
                    })
                    .collect(),
            ),
            Payload::Fields(f) => (f.keys().cloned().collect(), vec![f.values().cloned().collect()]),
        };
        writeln!(out, "{}", header.join("\t")).unwrap();
        for row in rows {
            writeln!(out, "{}", row.join("\t")).unwrap();
        }
        out
    }

    pub fn from_tsv(s: &str) -> Result<Self, DecodeError> {
        let mut kind = None;
        let mut inputs = BTreeMap::new();
        let mut table = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let err = |reason: &str| DecodeError::Tsv {
                line: i + 1,
                reason: reason.to_string(),
            };
            if let Some(meta) = line.strip_prefix("# ") {
                let (key, value) = meta.split_once('=').ok_or_else(|| err("comment without '='"))?;
                match key.strip_prefix("input.") {
                    Some(name) => {
                        inputs.insert(name.to_string(), value.to_string());
                    }
                    None if key == "kind" => kind = Some(value.to_string()),
                    None => return Err(err("unknown comment key")),
                }
            } else if !line.is_empty() {
                table.push((i + 1, line.split('\t').map(str::to_string).collect::<Vec<_>>()));
            }
        }
        let kind = kind.ok_or(DecodeError::Tsv {
            line: 1,
            reason: "missing kind".into(),
        })?;
        let ((header_line, header), rows) = match table.split_first() {
            Some((h, rows)) if !rows.is_empty() => (h.clone(), rows),
            _ => {
                return Err(DecodeError::Tsv {
                    line: 1,
                    reason: "missing header or value row".into(),
                })
            }
        };
        let bad = |reason: &str| DecodeError::Tsv {
            line: header_line,
            reason: reason.to_string(),
        };
        let single = || -> Result<&Vec<String>, DecodeError> {
            match rows {
                [(_, row)] if row.len() == header.len() => Ok(row),
                _ => Err(bad("expected exactly one row matching the header")),
            }
        };
        let payload = if header == degree_header(header.len()) {
            Payload::Coefficients(single()?.clone())
        } else if header.first().map(String::as_str) == Some("pole_order")
            && header[1..] == degree_header(header.len() - 1)[..]
        {
            let row = single()?;
            Payload::GeomForm {
                pole_order: row[0].parse().map_err(|_| bad("pole_order is not an integer"))?,
                numerator: row[1..].to_vec(),
            }
        } else if header == ["value"] {
            let value = &single()?[0];
            match value.as_str() {
                "true" => Payload::Boolean(true),
                "false" => Payload::Boolean(false),
                _ => Payload::Scalar(value.clone()),
            }
        } else if header == REPORT_HEADER {
            let suites = rows
                .iter()
                .map(|(line, row)| parse_suite_row(*line, row))
                .collect::<Result<Vec<_>, _>>()?;
            Payload::Report {
                passed: suites.iter().all(|s| s.passed),
                suites,
            }
        } else {
            let row = single()?;
            Payload::Fields(header.iter().cloned().zip(row.iter().cloned()).collect())
        };
        Ok(Self { kind, inputs, payload })
    }
}

const REPORT_HEADER: [&str; 5] = ["suite", "cases", "failed", "passed", "counterexamples"];

fn degree_header(len: usize) -> Vec<String> {
    (0..len).map(|d| format!("deg{d}")).collect()
}

fn parse_suite_row(line: usize, row: &[String]) -> Result<SuiteRow, DecodeError> {
    let err = |reason: &str| DecodeError::Tsv {
        line,
        reason: reason.to_string(),
    };
    let [suite, cases, failed, passed, counterexamples] = row else {
        return Err(err("report rows need five columns"));
    };
    Ok(SuiteRow {
        suite: suite.clone(),
        cases: cases.parse().map_err(|_| err("cases is not an integer"))?,
        failed: failed.parse().map_err(|_| err("failed is not an integer"))?,
        passed: passed.parse().map_err(|_| err("passed is not a boolean"))?,
        counterexamples: if counterexamples.is_empty() {
            Vec::new()
        } else {
            counterexamples.split(" ;; ").map(str::to_string).collect()
        },
    })
}
