//! Deterministic JSON assembly for command-line reports.
//!
//! Every report is a single JSON object with the same envelope: the command
//! name, the normalized inputs, the results, an optional certificate, and a
//! timing block. serde_json's default map keeps keys sorted, so the rendered
//! bytes are stable for fixed inputs; the `timing` field is the one part
//! that varies between runs and is meant to be stripped before comparing
//! outputs.
//!
//! All numbers are exact: integers of any size are emitted as JSON numbers
//! (the arbitrary-precision representation never rounds them), and
//! non-integer rationals are emitted as `"p/q"` strings.

use crate::linalg::Rat;
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{Map, Value};

/// An arbitrarily large integer as an exact JSON number.
pub fn json_int(v: &BigInt) -> Value {
    let n: serde_json::Number = v
        .to_string()
        .parse()
        .expect("an integer literal is always a valid JSON number");
    Value::Number(n)
}

pub fn json_usize(v: usize) -> Value {
    Value::Number(serde_json::Number::from(v as u64))
}

/// An exact rational: integers become JSON numbers, everything else the
/// string `"p/q"`.
pub fn json_rat(v: &Rat) -> Value {
    if v.denom().is_one() {
        json_int(v.numer())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn json_rat_vec(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(json_rat).collect())
}

pub fn json_int_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(json_int).collect())
}

/// The common report envelope. Rendered with sorted keys and a trailing
/// newline; everything except `timing` is byte-stable for fixed inputs.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub certificate: Option<Value>,
    pub timing_seconds: f64,
}

impl Report {
    pub fn render(&self) -> String {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.into()));
        root.insert("inputs".into(), self.inputs.clone());
        root.insert("results".into(), self.results.clone());
        if let Some(cert) = &self.certificate {
            root.insert("certificate".into(), cert.clone());
        }
        let mut timing = Map::new();
        timing.insert(
            "seconds".into(),
            serde_json::Number::from_f64(self.timing_seconds)
                .map(Value::Number)
                .unwrap_or(Value::Null),
        );
        root.insert("timing".into(), Value::Object(timing));
        let mut out = serde_json::to_string_pretty(&Value::Object(root))
            .expect("report values contain no non-serializable data");
        out.push('\n');
        out
    }
}
