use serde::Serialize;

use crate::arith::ExactRational;
use crate::poly::Polynomial;

/// One side of a checked identity at a failing index.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Exact(ExactRational),
    Polynomial(Polynomial),
    Approx(f64),
}

impl From<ExactRational> for Witness {
    fn from(v: ExactRational) -> Self {
        Witness::Exact(v)
    }
}

impl From<Polynomial> for Witness {
    fn from(v: Polynomial) -> Self {
        Witness::Polynomial(v)
    }
}

impl From<f64> for Witness {
    fn from(v: f64) -> Self {
        Witness::Approx(v)
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Exact(r) => write!(f, "{r}"),
            Witness::Polynomial(p) => write!(f, "{p}"),
            Witness::Approx(v) => f.write_str(&format_float(*v)),
        }
    }
}

/// Shortest round-trip rendering of a double, switching to exponent notation
/// outside `[1e-4, 1e16)`.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Verdict for one identity over an index range. `holds` is true exactly
/// when `first_failure` is `None`; `lhs`/`rhs` are the two sides at the
/// first failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub holds: bool,
    pub first_failure: Option<i64>,
    pub lhs: Option<Witness>,
    pub rhs: Option<Witness>,
}

impl IdentityReport {
    pub fn passed(identity: impl Into<String>) -> Self {
        IdentityReport {
            identity: identity.into(),
            holds: true,
            first_failure: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn failed(
        identity: impl Into<String>,
        index: i64,
        lhs: impl Into<Witness>,
        rhs: impl Into<Witness>,
    ) -> Self {
        IdentityReport {
            identity: identity.into(),
            holds: false,
            first_failure: Some(index),
            lhs: Some(lhs.into()),
            rhs: Some(rhs.into()),
        }
    }

    /// Compares `sides(i)` for each index in order and stops at the first
    /// pair that differs.
    pub fn check_exact<I, T, F>(identity: impl Into<String>, indices: I, mut sides: F) -> Self
    where
        I: IntoIterator<Item = i64>,
        T: PartialEq + Into<Witness>,
        F: FnMut(i64) -> (T, T),
    {
        let identity = identity.into();
        for i in indices {
            let (lhs, rhs) = sides(i);
            if lhs != rhs {
                return Self::failed(identity, i, lhs, rhs);
            }
        }
        Self::passed(identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn check_exact_stops_at_first_failure() {
        let r = IdentityReport::check_exact("square is small", 0..10, |i| {
            (rat(i * i, 1), rat(i * i, 1).min(rat(10, 1)))
        });
        assert!(!r.holds);
        assert_eq!(r.first_failure, Some(4));
        assert_eq!(r.lhs, Some(Witness::Exact(rat(16, 1))));
        assert_eq!(r.rhs, Some(Witness::Exact(rat(10, 1))));

        let ok = IdentityReport::check_exact("trivial", 0..10, |i| (rat(i, 1), rat(i, 1)));
        assert!(ok.holds && ok.first_failure.is_none());
    }

    #[test]
    fn float_rendering_round_trips() {
        for v in [
            0.0,
            -0.5,
            1.2337005501361697,
            9.899915924825424e-7,
            6.02e23,
            -1e-300,
        ] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(2.5e-7), "2.5e-7");
        assert_eq!(format_float(0.25), "0.25");
    }

    #[test]
    fn json_shape() {
        let r = IdentityReport::failed("x", 1, rat(-1, 2), rat(-2, 1));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "identity": "x", "holds": false, "first_failure": 1,
                "lhs": "-1/2", "rhs": "-2"
            })
        );
        let p = IdentityReport::passed("y");
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["first_failure"], serde_json::Value::Null);
    }
}
