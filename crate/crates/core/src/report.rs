//! Shared report vocabulary and canonical JSON rendering.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of a single check.
///
/// `Structural` marks properties that hold by construction (no sampling was
/// needed); `ProbeLimited` marks passes that rest on a finite probe standing
/// in for a limit or an unbounded quantifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Structural,
    ProbeLimited,
}

impl CheckStatus {
    pub fn passed(self) -> bool {
        self != CheckStatus::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Structural => "structural",
            CheckStatus::ProbeLimited => "probe-limited",
        }
    }
}

/// Significant digits used when rendering floats in reports.
pub const FLOAT_SIG_DIGITS: usize = 12;

/// Round to [`FLOAT_SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", FLOAT_SIG_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

fn canonicalize_value(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                // Integral JSON numbers keep their exact representation.
                if n.as_i64().is_none() && n.as_u64().is_none() {
                    if let Some(rounded) = serde_json::Number::from_f64(round_sig(f)) {
                        *value = Value::Number(rounded);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(canonicalize_value),
        Value::Object(map) => map.values_mut().for_each(canonicalize_value),
        _ => {}
    }
}

/// Render any serializable value as canonical JSON: stable key order (struct
/// field order) and floats rounded to twelve significant digits, so repeated
/// runs with the same inputs produce byte-identical output.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serialization");
    canonicalize_value(&mut v);
    serde_json::to_string_pretty(&v).expect("json rendering")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(2.0), 2.0);
        assert_eq!(round_sig(-1234.56789012349), -1234.56789012);
    }

    #[test]
    fn canonical_json_is_stable() {
        #[derive(Serialize)]
        struct Demo {
            b: f64,
            a: f64,
            n: u64,
        }
        let d = Demo {
            b: 1.0 / 3.0,
            a: 0.1 + 0.2,
            n: 7,
        };
        let one = to_canonical_json(&d);
        let two = to_canonical_json(&d);
        assert_eq!(one, two);
        assert!(one.contains("0.333333333333"));
        // Struct field order is preserved, not alphabetized.
        assert!(one.find("\"b\"").unwrap() < one.find("\"a\"").unwrap());
    }
}
