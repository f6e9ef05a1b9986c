use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A finite real number constrained to the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct UnitValue(f64);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UnitError {
    #[error("value {0} lies outside [0, 1]")]
    OutOfRange(f64),
    #[error("value {0} is not finite")]
    NonFinite(f64),
}

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    pub fn new(value: f64) -> Result<Self, UnitError> {
        if !value.is_finite() {
            return Err(UnitError::NonFinite(value));
        }
        if !(0.0..=1.0).contains(&value) {
            return Err(UnitError::OutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// True iff the value lies strictly inside (0, 1).
    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = UnitError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<UnitValue> for f64 {
    fn from(v: UnitValue) -> f64 {
        v.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_endpoints() {
        assert_eq!(UnitValue::new(0.0).unwrap().get(), 0.0);
        assert_eq!(UnitValue::new(1.0).unwrap().get(), 1.0);
    }

    #[test]
    fn rejects_out_of_range_and_non_finite() {
        assert!(matches!(UnitValue::new(-0.1), Err(UnitError::OutOfRange(_))));
        assert!(matches!(UnitValue::new(1.5), Err(UnitError::OutOfRange(_))));
        assert!(matches!(
            UnitValue::new(f64::NAN),
            Err(UnitError::NonFinite(_))
        ));
        assert!(matches!(
            UnitValue::new(f64::INFINITY),
            Err(UnitError::NonFinite(_))
        ));
    }

    #[test]
    fn serde_round_trip_enforces_range() {
        let v: UnitValue = serde_json::from_str("0.25").unwrap();
        assert_eq!(v.get(), 0.25);
        assert!(serde_json::from_str::<UnitValue>("1.25").is_err());
    }
}
