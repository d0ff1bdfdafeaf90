//! `λ(s) = Σ_{n≥0} (2n+1)^{-s}`: exact closed forms at even `s` from the Euler
//! numbers, and bounded numerical summation for real `s > 1`.

use std::f64::consts::PI;

use serde::Serialize;

use super::{ApproxValue, CompensatedSum};
use crate::arith::{factorial, ExactRational};
use crate::error::{Error, Result};
use crate::euler::EulerNumberTable;
use crate::report::IdentityReport;

/// Largest `m` accepted by the index-start probe.
pub const MAX_INDEX_START_ORDER: usize = 6;

const EPS: f64 = f64::EPSILON;
const MAX_SUM_TERMS: u64 = 1 << 32;

/// Rational `c` with `λ(s) = c·π^s` for even `s = 2m+2`:
/// `c = (-1)^{m+1} E_{2m+1} / (4·(2m+1)!)`.
pub fn lambda_closed_form(s: u32, table: &EulerNumberTable) -> Result<ExactRational> {
    if s < 2 || !s.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "closed form only exists for even s >= 2, got {s}"
        )));
    }
    let m = (s as usize - 2) / 2;
    let e = table.get(2 * m + 1)?;
    let denom = ExactRational::from_integer(factorial(2 * m as u64 + 1) * 4);
    let c = e / &denom;
    Ok(if m.is_multiple_of(2) { -c } else { c })
}

/// Crude bound `(2N+1)^{1-s} / (2(s-1))` on `Σ_{n>N} (2n+1)^{-s}`.
pub fn lambda_tail_bound(s: f64, terms: u64) -> f64 {
    (2.0 * terms as f64 + 1.0).powf(1.0 - s) / (2.0 * (s - 1.0))
}

/// `∫_{N+1/2}^∞ (2u+1)^{-s} du`, the midpoint-rule estimate of the tail.
fn tail_estimate(s: f64, terms: u64) -> f64 {
    (2.0 * terms as f64 + 2.0).powf(1.0 - s) / (2.0 * (s - 1.0))
}

/// Bound on `tail_estimate - true tail` (which is nonnegative, the summand
/// being convex): `Σ_{n>N} f''(n-1/2)/24 ≤ -f'(N-1/2)/24 = s(2N)^{-s-1}/12`.
fn tail_estimate_error(s: f64, terms: u64) -> f64 {
    s * (2.0 * terms as f64).powf(-s - 1.0) / 12.0
}

/// `Σ_{n≥start} (2n+1)^{-s}` to within `tolerance`.
///
/// Terms are summed directly through some `N`; the rest is replaced by the
/// midpoint-rule integral, whose error is bounded analytically.
pub fn odd_power_sum(s: f64, start: u64, tolerance: f64) -> Result<ApproxValue> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!(
            "series diverges for s = {s}; need s > 1"
        )));
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    // (2N)^{s+1} ≥ s / (12 · tol/2) halves the remainder budget.
    let guess = (s / (6.0 * tolerance)).powf(1.0 / (s + 1.0)) / 2.0;
    let mut terms = (guess.ceil() as u64).max(start).max(1);
    loop {
        if terms > MAX_SUM_TERMS {
            return Err(Error::ToleranceUnreachable {
                tolerance,
                reason: format!("more than {MAX_SUM_TERMS} terms would be needed for s = {s}"),
            });
        }
        let mut sum = CompensatedSum::default();
        for n in start..=terms {
            sum.add((2.0 * n as f64 + 1.0).powf(-s));
        }
        let half_width = tail_estimate_error(s, terms) / 2.0;
        let tail = tail_estimate(s, terms);
        let mut total = sum;
        total.add(tail - half_width);
        // powf is accurate to a few ulp per term; the tail formula likewise.
        let rounding = total.rounding_bound() + 4.0 * EPS * sum.value() + 8.0 * EPS * tail;
        let error_bound = half_width * (1.0 + 8.0 * EPS) + rounding;
        if error_bound <= tolerance {
            return Ok(ApproxValue {
                value: total.value(),
                error_bound,
            });
        }
        terms *= 2;
    }
}

/// `λ(s) = Σ_{n≥0} (2n+1)^{-s}` to within `tolerance`.
pub fn lambda_numeric(s: f64, tolerance: f64) -> Result<ApproxValue> {
    odd_power_sum(s, 0, tolerance)
}

/// Closed form `(-1)^{m+1} E_{2m+1} π^{2m+2} / (4(2m+1)!)` compared against
/// sums over odd denominators starting at `n = 0` and at `n = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexStartProbe {
    pub m: usize,
    pub closed_form_coefficient: ExactRational,
    pub closed_form: f64,
    pub from_zero: ApproxValue,
    pub from_one: ApproxValue,
    pub zero_start_matches: bool,
    pub one_start_matches: bool,
}

impl IndexStartProbe {
    pub fn report(&self) -> IdentityReport {
        let name = format!(
            "Σ_(n≥0) (2n+1)^(-{}) = {} π^{}",
            2 * self.m + 2,
            self.closed_form_coefficient,
            2 * self.m + 2
        );
        if self.zero_start_matches {
            IdentityReport::passed(name)
        } else {
            IdentityReport::failed(name, self.m as i64, self.from_zero.value, self.closed_form)
        }
    }

    /// Same comparison with the sum starting at `n = 1`.
    pub fn one_start_report(&self) -> IdentityReport {
        let name = format!(
            "Σ_(n≥1) (2n+1)^(-{}) = {} π^{}",
            2 * self.m + 2,
            self.closed_form_coefficient,
            2 * self.m + 2
        );
        if self.one_start_matches {
            IdentityReport::passed(name)
        } else {
            IdentityReport::failed(name, self.m as i64, self.from_one.value, self.closed_form)
        }
    }
}

pub fn probe_odd_power_index_start(m: usize) -> Result<IndexStartProbe> {
    if m > MAX_INDEX_START_ORDER {
        return Err(Error::Domain(format!(
            "index-start probe supports m <= {MAX_INDEX_START_ORDER}, got {m}"
        )));
    }
    let s = 2 * m as u32 + 2;
    let table = EulerNumberTable::new(2 * m + 1);
    let coefficient = lambda_closed_form(s, &table)?;
    let closed_form = coefficient.to_f64() * PI.powi(s as i32);
    let closed_form_err = (s as f64 + 4.0) * EPS * closed_form.abs();
    let tol = 1e-13;
    let from_zero = odd_power_sum(s as f64, 0, tol)?;
    let from_one = odd_power_sum(s as f64, 1, tol)?;
    let matches =
        |a: &ApproxValue| (a.value - closed_form).abs() <= 10.0 * (a.error_bound + closed_form_err);
    Ok(IndexStartProbe {
        m,
        zero_start_matches: matches(&from_zero),
        one_start_matches: matches(&from_one),
        closed_form_coefficient: coefficient,
        closed_form,
        from_zero,
        from_one,
    })
}

/// Report for the `n = 0` start; see [`probe_odd_power_index_start`] for both.
pub fn verify_odd_power_index_start(m: usize) -> Result<IdentityReport> {
    Ok(probe_odd_power_index_start(m)?.report())
}
