//! Simplified neutrosophic numbers.
//!
//! An SNN is a triple `(g, b, y)` of unit-interval degrees: truth,
//! indeterminacy and falsity. The arithmetic here is the componentwise
//! algebra: addition through the probabilistic sum `x + y − xy`,
//! multiplication through the plain product, plus the scalar operations
//! `α·u = 1 − (1 − u)^α` and `u^α`. Containment compares truth upward and
//! the other two degrees downward.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::unit::{UnitError, UnitValue};

/// A simplified neutrosophic number; serializes as the three-element array
/// `[g, b, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Snn {
    g: f64,
    b: f64,
    y: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SnnError {
    #[error("component {component}: {source}")]
    Component {
        component: &'static str,
        source: UnitError,
    },
    #[error("scalar exponent must be positive, got {0}")]
    NonPositiveExponent(f64),
}

impl Snn {
    pub fn new(g: f64, b: f64, y: f64) -> Result<Self, SnnError> {
        for (component, value) in [("g", g), ("b", b), ("y", y)] {
            UnitValue::new(value).map_err(|source| SnnError::Component { component, source })?;
        }
        Ok(Snn { g, b, y })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.g, self.b, self.y]
    }
}

impl TryFrom<[f64; 3]> for Snn {
    type Error = SnnError;

    fn try_from(v: [f64; 3]) -> Result<Self, Self::Error> {
        Snn::new(v[0], v[1], v[2])
    }
}

impl From<Snn> for [f64; 3] {
    fn from(v: Snn) -> [f64; 3] {
        v.as_array()
    }
}

// a + b - ab >= max(a, b) algebraically; the correction only strips rounding
// noise and keeps the identities at 0 and 1 bit-exact.
fn prob_sum(a: f64, b: f64) -> f64 {
    (a + b - a * b).max(a).max(b).min(1.0)
}

/// Componentwise `u + v − u·v`.
pub fn snn_add(u: Snn, v: Snn) -> Snn {
    Snn {
        g: prob_sum(u.g, v.g),
        b: prob_sum(u.b, v.b),
        y: prob_sum(u.y, v.y),
    }
}

/// Componentwise product.
pub fn snn_multiply(u: Snn, v: Snn) -> Snn {
    Snn {
        g: u.g * v.g,
        b: u.b * v.b,
        y: u.y * v.y,
    }
}

// 1 - (1-x)^alpha computed as -expm1(alpha * ln1p(-x)) to avoid the
// cancellation of the direct form when (1-x)^alpha is close to 1 or 0.
fn scale_component(alpha: f64, x: f64) -> f64 {
    if x >= 1.0 {
        return 1.0;
    }
    (-((alpha * (-x).ln_1p()).exp_m1())).clamp(0.0, 1.0)
}

/// `α·u = (1 − (1−g)^α, 1 − (1−b)^α, 1 − (1−y)^α)` for `α > 0`.
pub fn snn_scale(alpha: f64, u: Snn) -> Result<Snn, SnnError> {
    if alpha <= 0.0 || alpha.is_nan() {
        return Err(SnnError::NonPositiveExponent(alpha));
    }
    Ok(Snn {
        g: scale_component(alpha, u.g),
        b: scale_component(alpha, u.b),
        y: scale_component(alpha, u.y),
    })
}

/// `u^α = (g^α, b^α, y^α)` for `α > 0`.
pub fn snn_power(alpha: f64, u: Snn) -> Result<Snn, SnnError> {
    if alpha <= 0.0 || alpha.is_nan() {
        return Err(SnnError::NonPositiveExponent(alpha));
    }
    Ok(Snn {
        g: u.g.powf(alpha).clamp(0.0, 1.0),
        b: u.b.powf(alpha).clamp(0.0, 1.0),
        y: u.y.powf(alpha).clamp(0.0, 1.0),
    })
}

/// Containment: `u ⊆ v` iff `g_u ≤ g_v`, `b_u ≥ b_v` and `y_u ≥ y_v`.
pub fn snn_included(u: Snn, v: Snn) -> bool {
    u.g <= v.g && u.b >= v.b && u.y >= v.y
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn snn(g: f64, b: f64, y: f64) -> Snn {
        Snn::new(g, b, y).unwrap()
    }

    fn assert_snn_close(u: Snn, expect: [f64; 3], eps: f64) {
        assert_abs_diff_eq!(u.g(), expect[0], epsilon = eps);
        assert_abs_diff_eq!(u.b(), expect[1], epsilon = eps);
        assert_abs_diff_eq!(u.y(), expect[2], epsilon = eps);
    }

    #[test]
    fn add_examples() {
        let u = snn(0.5, 0.2, 0.3);
        let v = snn(0.4, 0.1, 0.6);
        assert_snn_close(snn_add(u, v), [0.7, 0.28, 0.72], 1e-12);
        assert_eq!(snn_add(u, snn(0.0, 0.0, 0.0)), u);
        assert_eq!(snn_add(snn(1.0, 1.0, 1.0), v), snn(1.0, 1.0, 1.0));
    }

    #[test]
    fn multiply_examples() {
        let u = snn(0.5, 0.2, 0.3);
        let v = snn(0.4, 0.1, 0.6);
        assert_snn_close(snn_multiply(u, v), [0.2, 0.02, 0.18], 1e-12);
        assert_eq!(snn_multiply(u, snn(1.0, 1.0, 1.0)), u);
        assert_eq!(snn_multiply(u, snn(0.0, 0.0, 0.0)), snn(0.0, 0.0, 0.0));
    }

    #[test]
    fn scale_examples() {
        let u = snn(0.5, 0.2, 0.3);
        assert_snn_close(snn_scale(1.0, u).unwrap(), u.as_array(), 1e-12);
        assert_snn_close(
            snn_scale(2.0, snn(0.5, 0.5, 0.5)).unwrap(),
            [0.75, 0.75, 0.75],
            1e-12,
        );
        assert_eq!(
            snn_scale(3.5, snn(0.0, 0.0, 0.0)).unwrap(),
            snn(0.0, 0.0, 0.0)
        );
        assert!(matches!(
            snn_scale(0.0, u),
            Err(SnnError::NonPositiveExponent(_))
        ));
    }

    #[test]
    fn power_examples() {
        let u = snn(0.5, 0.2, 0.3);
        assert_snn_close(snn_power(1.0, u).unwrap(), u.as_array(), 1e-12);
        assert_snn_close(snn_power(2.0, u).unwrap(), [0.25, 0.04, 0.09], 1e-12);
        assert_eq!(
            snn_power(4.2, snn(1.0, 1.0, 1.0)).unwrap(),
            snn(1.0, 1.0, 1.0)
        );
        assert!(matches!(
            snn_power(-1.0, u),
            Err(SnnError::NonPositiveExponent(_))
        ));
    }

    #[test]
    fn inclusion_examples() {
        assert!(snn_included(snn(0.3, 0.5, 0.5), snn(0.6, 0.2, 0.1)));
        let u = snn(0.4, 0.4, 0.4);
        assert!(snn_included(u, u));
        assert!(!snn_included(snn(0.9, 0.0, 0.0), snn(0.1, 1.0, 1.0)));
    }

    #[test]
    fn construction_rejects_bad_components() {
        assert!(Snn::new(1.2, 0.0, 0.0).is_err());
        assert!(Snn::new(0.2, -0.1, 0.0).is_err());
        assert!(Snn::new(0.2, 0.1, f64::NAN).is_err());
    }

    fn arb_snn() -> impl Strategy<Value = Snn> {
        (0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(g, b, y)| snn(g, b, y))
    }

    proptest! {
        #[test]
        fn closure_under_all_operations(u in arb_snn(), v in arb_snn(), alpha in 0.01f64..10.0) {
            for w in [
                snn_add(u, v),
                snn_multiply(u, v),
                snn_scale(alpha, u).unwrap(),
                snn_power(alpha, u).unwrap(),
            ] {
                prop_assert!((0.0..=1.0).contains(&w.g()));
                prop_assert!((0.0..=1.0).contains(&w.b()));
                prop_assert!((0.0..=1.0).contains(&w.y()));
            }
        }

        #[test]
        fn add_and_multiply_commute_and_associate(u in arb_snn(), v in arb_snn(), w in arb_snn()) {
            for (l, r) in [
                (snn_add(u, v), snn_add(v, u)),
                (snn_multiply(u, v), snn_multiply(v, u)),
                (snn_add(snn_add(u, v), w), snn_add(u, snn_add(v, w))),
                (snn_multiply(snn_multiply(u, v), w), snn_multiply(u, snn_multiply(v, w))),
            ] {
                prop_assert!((l.g() - r.g()).abs() <= 1e-12);
                prop_assert!((l.b() - r.b()).abs() <= 1e-12);
                prop_assert!((l.y() - r.y()).abs() <= 1e-12);
            }
        }

        // Exponents and components are kept where the double rounding of the
        // composed route leaves the 1e-12 comparison meaningful.
        #[test]
        fn scalar_operations_compose(
            u in (0.0f64..=0.9, 0.0f64..=0.9, 0.0f64..=0.9).prop_map(|(g, b, y)| snn(g, b, y)),
            a in 0.25f64..=3.0,
            b in 0.25f64..=3.0,
        ) {
            let s1 = snn_scale(a, snn_scale(b, u).unwrap()).unwrap();
            let s2 = snn_scale(a * b, u).unwrap();
            let p1 = snn_power(a, snn_power(b, u).unwrap()).unwrap();
            let p2 = snn_power(a * b, u).unwrap();
            for (l, r) in [(s1, s2), (p1, p2)] {
                prop_assert!((l.g() - r.g()).abs() <= 1e-12);
                prop_assert!((l.b() - r.b()).abs() <= 1e-12);
                prop_assert!((l.y() - r.y()).abs() <= 1e-12);
            }
        }

        #[test]
        fn inclusion_is_a_partial_order(u in arb_snn(), v in arb_snn(), w in arb_snn()) {
            prop_assert!(snn_included(u, u));
            if snn_included(u, v) && snn_included(v, u) {
                prop_assert_eq!(u, v);
            }
            if snn_included(u, v) && snn_included(v, w) {
                prop_assert!(snn_included(u, w));
            }
        }
    }
}
