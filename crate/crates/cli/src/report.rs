//! Output records. JSON carries full-precision doubles; text output uses the
//! configured number of significant digits.

use grover_abszeta_core::Rational;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::Settings;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    ClosedForm,
    Continuation,
    Quadrature,
    Series,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::ClosedForm => "closed-form",
            Method::Continuation => "continuation",
            Method::Quadrature => "quadrature",
            Method::Series => "series",
        }
    }
}

/// One numeric result of the absolute-zeta machinery.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbsZetaRecord {
    pub n: usize,
    pub operation: String,
    pub params: Map<String, Value>,
    pub value_re: f64,
    pub value_im: f64,
    pub error_estimate: f64,
    pub method: Method,
}

impl AbsZetaRecord {
    pub fn new(
        n: usize,
        operation: &str,
        params: Value,
        value: Complex64,
        error_estimate: f64,
        method: Method,
    ) -> Self {
        let params = match params {
            Value::Object(map) => map,
            other => {
                let mut map = Map::new();
                map.insert("value".into(), other);
                map
            }
        };
        Self {
            n,
            operation: operation.into(),
            params,
            value_re: value.re,
            value_im: value.im,
            error_estimate,
            method,
        }
    }

    pub fn real(
        n: usize,
        operation: &str,
        params: Value,
        value: f64,
        err: f64,
        method: Method,
    ) -> Self {
        Self::new(
            n,
            operation,
            params,
            Complex64::new(value, 0.0),
            err,
            method,
        )
    }

    pub fn text(&self, digits: usize) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", param_text(v)))
            .collect();
        let value = if self.value_im == 0.0 {
            sig(self.value_re, digits)
        } else {
            format!(
                "{} {} {}i",
                sig(self.value_re, digits),
                if self.value_im < 0.0 { "-" } else { "+" },
                sig(self.value_im.abs(), digits)
            )
        };
        format!(
            "{}({}) = {}  [{}, err ≤ {}]",
            self.operation,
            params.join(", "),
            value,
            self.method.tag(),
            sig(self.error_estimate, 2)
        )
    }
}

fn param_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `{"value": "p/q", "exact": true, "method": "exact"}`.
pub fn exact_value(q: &Rational) -> Value {
    json!({ "value": q.to_string(), "exact": true, "method": Method::Exact })
}

pub fn exact_text(text: impl Into<String>) -> Value {
    json!({ "value": text.into(), "exact": true, "method": Method::Exact })
}

/// A finished command: JSON payload plus its text rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub n: Option<usize>,
    pub payload: Value,
    pub text: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &'static str, n: Option<usize>) -> Self {
        Self {
            command,
            n,
            payload: Value::Object(Map::new()),
            text: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        if let Value::Object(map) = &mut self.payload {
            map.insert(key.into(), v);
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.text.push(text.into());
    }

    pub fn to_json(&self, settings: &Settings) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "n": self.n,
            "precision_config": settings,
            "payload": self.payload,
        })
    }

    pub fn render(&self, settings: &Settings, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json(settings)).expect("json");
            s.push('\n');
            s
        } else {
            let mut s = self.text.join("\n");
            s.push('\n');
            s
        }
    }
}

/// Structured form of a failure, used for `--json` output.
pub fn error_json(command: &str, n: Option<usize>, err: &CliError) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "n": n,
        "error": { "kind": err.kind(), "message": err.to_string() },
    })
}

/// `x` to `digits` significant digits: fixed notation for moderate
/// magnitudes, scientific otherwise.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let exponent = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.*e}", digits - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grover_abszeta_core::exact::rational;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(1.479_337_559_594_319, 8), "1.4793376");
        assert_eq!(sig(-0.000_123_456, 3), "-0.000123");
        assert_eq!(sig(2.152e-9, 3), "2.15e-9");
        assert_eq!(sig(0.0, 5), "0");
        assert_eq!(sig(123_456_789.0, 4), "1.235e8");
    }

    #[test]
    fn exact_values_are_fraction_strings() {
        let v = exact_value(&rational(-2, 3));
        assert_eq!(v["value"], "-2/3");
        assert_eq!(v["exact"], true);
        assert_eq!(v["method"], "exact");
    }

    #[test]
    fn record_shape() {
        let r = AbsZetaRecord::real(
            2,
            "absolute_zeta",
            json!({"s": -1.0}),
            1.5,
            1e-12,
            Method::Continuation,
        );
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            vec![
                "error_estimate",
                "method",
                "n",
                "operation",
                "params",
                "value_im",
                "value_re"
            ]
        );
        assert_eq!(v["method"], "continuation");
        assert!(r.text(6).starts_with("absolute_zeta(s=-1.0) = 1.50000"));
    }
}
