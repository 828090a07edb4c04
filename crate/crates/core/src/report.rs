//! Structured claim verdicts and their deterministic JSON form.
//!
//! A [`ClaimReport`] pairs a published claim (quoted verbatim in
//! `paper_statement`) with the value this crate computes by following the
//! published procedure and with an independent oracle value. A mismatch is a
//! first-class result: the report keeps both sides and itemizes the
//! difference instead of correcting either one.
//!
//! JSON serialization is byte-deterministic: map orderings are fixed and
//! every float is written with 17 significant digits in scientific notation.

use std::io::{self, Write};

use num::complex::Complex64;
use num::BigRational;
use num::ToPrimitive;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

/// Outcome of comparing a computed value against its oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Structured value slot inside a claim: claims compare spectra, spin sets,
/// series, booleans and text, so one small sum type covers all of them.
/// Complex numbers serialize as `{"re":…,"im":…}`, rationals as
/// `{"num":…,"den":…}`.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportValue {
    None,
    Bool(bool),
    Int(i64),
    Real(f64),
    Complex(Complex64),
    Rational(BigRational),
    Text(String),
    List(Vec<ReportValue>),
    /// Object with a fixed key order.
    Map(Vec<(String, ReportValue)>),
}

impl ReportValue {
    pub fn rational_i64(num: i64, den: i64) -> Self {
        ReportValue::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn reals<I: IntoIterator<Item = f64>>(values: I) -> Self {
        ReportValue::List(values.into_iter().map(ReportValue::Real).collect())
    }

    pub fn rationals<I: IntoIterator<Item = BigRational>>(values: I) -> Self {
        ReportValue::List(values.into_iter().map(ReportValue::Rational).collect())
    }
}

impl Serialize for ReportValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ReportValue::None => s.serialize_unit(),
            ReportValue::Bool(b) => s.serialize_bool(*b),
            ReportValue::Int(v) => s.serialize_i64(*v),
            ReportValue::Real(v) => s.serialize_f64(*v),
            ReportValue::Complex(z) => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("re", &z.re)?;
                map.serialize_entry("im", &z.im)?;
                map.end()
            }
            ReportValue::Rational(q) => {
                let num = q.numer().to_i64().expect("rational numerator exceeds i64");
                let den = q.denom().to_i64().expect("rational denominator exceeds i64");
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("num", &num)?;
                map.serialize_entry("den", &den)?;
                map.end()
            }
            ReportValue::Text(t) => s.serialize_str(t),
            ReportValue::List(items) => {
                let mut seq = s.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            ReportValue::Map(entries) => {
                let mut map = s.serialize_map(Some(entries.len()))?;
                for (k, v) in entries {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
    }
}

/// Verdict on a single published claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    /// Verbatim quote of the claim under test.
    pub paper_statement: String,
    /// The value as published.
    pub paper_value: ReportValue,
    /// What this crate gets by following the published procedure.
    pub computed_value: ReportValue,
    /// Independent brute-force / closed-form check.
    pub oracle_value: ReportValue,
    pub verdict: Verdict,
    pub details: String,
}

impl ClaimReport {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

/// Top-level report bundle: `{"tool":…,"version":…,"hbar":…,"tolerance":…,
/// "claims":[…]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub tool: String,
    pub version: String,
    pub hbar: f64,
    pub tolerance: f64,
    pub claims: Vec<ClaimReport>,
}

impl ReportBundle {
    pub fn new(tool: &str, version: &str, hbar: f64, tolerance: f64) -> Self {
        ReportBundle {
            tool: tool.to_string(),
            version: version.to_string(),
            hbar,
            tolerance,
            claims: Vec::new(),
        }
    }

    pub fn all_match(&self) -> bool {
        self.claims.iter().all(ClaimReport::is_match)
    }
}

struct SciFloatFormatter;

impl serde_json::ser::Formatter for SciFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        // 17 significant digits round-trips every finite f64.
        write!(writer, "{:.16e}", value)
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{:.16e}", value)
    }
}

/// Serialize any value to JSON with the fixed float formatting. The output is
/// byte-identical across runs for identical inputs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFloatFormatter);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// `to_json` plus a trailing newline, the form written to files and stdout.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = to_json(value);
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_use_seventeen_significant_digits() {
        assert_eq!(to_json(&0.5f64), "5.0000000000000000e-1");
        assert_eq!(to_json(&0.0f64), "0.0000000000000000e0");
        assert_eq!(to_json(&-1.0f64), "-1.0000000000000000e0");
    }

    #[test]
    fn complex_and_rational_shapes() {
        let z = ReportValue::Complex(Complex64::new(0.0, -1.0));
        assert_eq!(to_json(&z), r#"{"re":0.0000000000000000e0,"im":-1.0000000000000000e0}"#);
        let q = ReportValue::rational_i64(7, 2);
        assert_eq!(to_json(&q), r#"{"num":7,"den":2}"#);
    }

    #[test]
    fn bundle_field_order_is_fixed() {
        let bundle = ReportBundle::new("demo", "0.0.0", 1.0, 1e-10);
        let json = to_json(&bundle);
        assert!(json.starts_with(r#"{"tool":"demo","version":"0.0.0","hbar":"#));
        assert!(json.contains(r#""claims":[]"#));
    }

    #[test]
    fn serialization_is_reproducible() {
        let report = ClaimReport {
            claim_id: "demo".into(),
            paper_statement: "statement".into(),
            paper_value: ReportValue::reals([0.1, 0.2]),
            computed_value: ReportValue::Bool(true),
            oracle_value: ReportValue::None,
            verdict: Verdict::Match,
            details: String::new(),
        };
        assert_eq!(to_json(&report), to_json(&report.clone()));
    }
}
