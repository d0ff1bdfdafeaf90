//! Fourier analysis of the Euler functions: exact symbolic coefficients,
//! a quadrature cross-check, error-bounded evaluation of the Fourier series,
//! and the odd-denominator power sums `λ(s) = Σ_{n≥0} (2n+1)^{-s}`.

mod coefficient;
mod lambda;
mod series;

pub use coefficient::{
    fourier_coefficient, fourier_coefficient_by_quadrature, quadrature_error_estimate,
    FourierCoefficient, MAX_QUADRATURE_ORDER, MIN_SUBDIVISIONS,
};
pub use lambda::{
    lambda_closed_form, lambda_numeric, lambda_tail_bound, odd_power_sum,
    probe_odd_power_index_start, verify_odd_power_index_start, IndexStartProbe,
    MAX_INDEX_START_ORDER,
};
pub use series::{
    eval_fourier, eval_fourier_terms, exact_extended_value, partial_sum, tail_bound, Domain,
    MAX_TERMS,
};

use serde::Serialize;

/// Floating-point value with a rigorous bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxValue {
    pub value: f64,
    pub error_bound: f64,
}

impl ApproxValue {
    pub fn contains(&self, exact: f64) -> bool {
        (self.value - exact).abs() <= self.error_bound
    }
}

/// Compensated (Neumaier) running sum that also tracks `Σ|x|`.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub(crate) fn merge(mut self, other: CompensatedSum) -> CompensatedSum {
        self.add(other.sum);
        self.add(other.compensation);
        // `add` counted the partial sums; replace with the true magnitude.
        self.abs_sum += other.abs_sum - other.sum.abs() - other.compensation.abs();
        self
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }

    /// Bound on `|value() - exact sum of the added terms|`.
    pub(crate) fn rounding_bound(&self) -> f64 {
        // Neumaier: 2ε|S| + O(nε²)Σ|x|; the second term is folded into 4ε Σ|x|.
        2.0 * f64::EPSILON * self.value().abs() + 4.0 * f64::EPSILON * self.abs_sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive() {
        let mut s = CompensatedSum::default();
        let mut naive = 0.0;
        for x in [1e16, 1.0, -1e16, 1.0] {
            s.add(x);
            naive += x;
        }
        assert_eq!(s.value(), 2.0);
        assert_ne!(naive, 2.0);
    }

    #[test]
    fn merge_keeps_abs_sum() {
        let mut a = CompensatedSum::default();
        let mut b = CompensatedSum::default();
        for k in 0..100 {
            a.add(k as f64 * 0.5);
            b.add(-(k as f64) * 0.25);
        }
        let m = a.merge(b);
        assert!((m.abs_sum - (2475.0 + 1237.5)).abs() < 1e-9);
        assert!((m.value() - (2475.0 - 1237.5)).abs() < 1e-12);
    }
}
