//! Error-bounded evaluation of the Fourier series of the Euler functions,
//!
//! ```text
//! E_m(x) = 2·m! Σ_{n∈ℤ} e^{(2n+1)πix} / ((2n+1)πi)^{m+1},   0 ≤ x < 1.
//! ```
//!
//! Terms `n` and `-(n+1)` are conjugate and are summed together as
//! `(4·m!/π^{m+1}) · cos((2n+1)πx - (m+1)π/2) / (2n+1)^{m+1}` for `n ≥ 0`.
//! For `m ≥ 1` the paired series converges absolutely and the omitted tail
//! beyond `N` is bounded by [`tail_bound`]. The series is antiperiodic
//! (`f(x+1) = -f(x)`), which [`Domain::Antiperiodic`] exposes.

use std::f64::consts::PI;

use num_integer::Integer;
use rayon::prelude::*;

use super::{ApproxValue, CompensatedSum};
use crate::arith::{factorial, ExactRational};
use crate::error::{Error, Result};
use crate::euler::{euler_polynomial, EulerNumberTable};

/// Upper limit on the number of paired terms a single evaluation may use.
pub const MAX_TERMS: u64 = 1 << 34;

const CHUNK: u64 = 1 << 16;
const EPS: f64 = f64::EPSILON;

/// Which arguments are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domain {
    /// `0 ≤ x < 1`, where the series equals the Euler polynomial.
    #[default]
    Principal,
    /// Any finite `x`; the series continues `E_m` antiperiodically.
    Antiperiodic,
}

fn check_x(x: f64, domain: Domain) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    if domain == Domain::Principal && !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "x = {x} is outside [0, 1); enable the antiperiodic extension to evaluate it"
        )));
    }
    Ok(())
}

/// `4·m!/π^{m+1}`
fn prefactor(m: usize) -> f64 {
    4.0 * ExactRational::from_integer(factorial(m as u64)).to_f64() / PI.powi(m as i32 + 1)
}

/// Bound on the absolute sum of all paired terms with index `n > terms`:
/// `(4·m!/π^{m+1}) · (2N+1)^{-m} / (2m)`.
pub fn tail_bound(m: usize, terms: u64) -> f64 {
    assert!(m >= 1, "tail bound needs m >= 1");
    let q = 2.0 * terms as f64 + 1.0;
    let raw = prefactor(m) * q.powi(-(m as i32)) / (2.0 * m as f64);
    // Absorb the rounding in evaluating the bound itself.
    raw * (1.0 + 16.0 * (m as f64 + 4.0) * EPS)
}

/// Smallest `N` with `tail_bound(m, N) ≤ target`.
fn terms_for(m: usize, target: f64) -> Result<u64> {
    // (2N+1)^m ≥ prefactor / (2m·target)
    let need = prefactor(m) / (2.0 * m as f64 * target);
    let guess = ((need.powf(1.0 / m as f64) - 1.0) / 2.0).ceil().max(0.0);
    if !guess.is_finite() || guess > MAX_TERMS as f64 {
        return Err(Error::ToleranceUnreachable {
            tolerance: target,
            reason: format!("more than {MAX_TERMS} terms would be needed for m = {m}"),
        });
    }
    let mut n = (guess as u64).saturating_sub(2);
    while tail_bound(m, n) > target {
        n += 1;
    }
    Ok(n)
}

/// Sum of paired terms `0..=terms` and a bound on its rounding error.
fn paired_sum(m: usize, x: f64, terms: u64) -> (f64, f64) {
    let k = prefactor(m);
    let half_shift = (m as f64 + 1.0) / 2.0;
    let ax = x.abs();
    let chunk = |start: u64, end: u64| {
        let mut sum = CompensatedSum::default();
        let mut eval_err = 0.0;
        for n in start..end {
            let q = (2 * n + 1) as f64;
            // Phase in half-turns, reduced mod 2 before scaling by π.
            let u = q * x - half_shift;
            let r = u.rem_euclid(2.0);
            let c = (PI * r).cos();
            let denom = q.powi(m as i32 + 1);
            let t = k * c / denom;
            sum.add(t);
            // Error in the phase from q·x and the shift, in the reduction,
            // and in π; then cos itself and the magnitude arithmetic.
            let du = EPS * (2.0 * q * ax + half_shift) + 2.0 * EPS;
            let dtheta = PI * du + 4.0 * PI * EPS;
            eval_err += k / denom * (dtheta + EPS) + t.abs() * (2.0 * m as f64 + 8.0) * EPS;
        }
        (sum, eval_err)
    };
    let chunks = (terms + 1).div_ceil(CHUNK);
    let (sum, eval_err) = (0..chunks)
        .into_par_iter()
        .map(|i| chunk(i * CHUNK, ((i + 1) * CHUNK).min(terms + 1)))
        .reduce(
            || (CompensatedSum::default(), 0.0),
            |(a, ea), (b, eb)| (a.merge(b), ea + eb),
        );
    (sum.value(), 2.0 * (eval_err + sum.rounding_bound()))
}

/// Partial sum of the paired series through index `terms`, for any `m`.
/// No error guarantee; for `m = 0` the series converges only conditionally.
pub fn partial_sum(m: usize, x: f64, terms: u64) -> f64 {
    paired_sum(m, x, terms).0
}

/// Evaluate with a fixed number of paired terms; the bound is the analytic
/// tail plus the rounding allowance.
pub fn eval_fourier_terms(m: usize, x: f64, terms: u64, domain: Domain) -> Result<ApproxValue> {
    if m == 0 {
        return Err(Error::Domain(
            "m = 0: the series converges only conditionally, so no error bound exists".into(),
        ));
    }
    check_x(x, domain)?;
    if terms > MAX_TERMS {
        return Err(Error::Domain(format!(
            "at most {MAX_TERMS} terms are supported"
        )));
    }
    let (value, rounding) = paired_sum(m, x, terms);
    Ok(ApproxValue {
        value,
        error_bound: tail_bound(m, terms) + rounding,
    })
}

/// Evaluate `E_m(x)` from its Fourier series to within `tolerance`.
pub fn eval_fourier(m: usize, x: f64, tolerance: f64, domain: Domain) -> Result<ApproxValue> {
    if m == 0 {
        return Err(Error::Domain(
            "m = 0: the series converges only conditionally, so no tolerance can be guaranteed"
                .into(),
        ));
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    check_x(x, domain)?;
    // Spend most of the budget on the tail; if rounding eats too much, retry
    // with a smaller share.
    for share in [0.99, 0.5, 0.1] {
        let terms = terms_for(m, tolerance * share)?;
        let approx = eval_fourier_terms(m, x, terms, domain)?;
        if approx.error_bound <= tolerance {
            return Ok(approx);
        }
    }
    Err(Error::ToleranceUnreachable {
        tolerance,
        reason: "rounding error alone exceeds the tolerance".into(),
    })
}

/// Exact value of the antiperiodic continuation of `E_m` at a rational `x`:
/// `(-1)^⌊x⌋ E_m(x - ⌊x⌋)`.
pub fn exact_extended_value(
    m: usize,
    x: &ExactRational,
    table: &EulerNumberTable,
) -> Result<ExactRational> {
    let floor = x.as_ratio().floor();
    let frac = x - ExactRational::from_integer(floor.to_integer());
    let value = euler_polynomial(m, table)?.eval(&frac);
    Ok(if floor.to_integer().is_odd() {
        -value
    } else {
        value
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn exact(m: usize, x: f64) -> f64 {
        let t = EulerNumberTable::new(m);
        let xr = ExactRational::from_f64(x).unwrap();
        euler_polynomial(m, &t).unwrap().eval(&xr).to_f64()
    }

    #[test]
    fn documented_points() {
        let v = eval_fourier(1, 0.0, 1e-6, Domain::Principal).unwrap();
        assert!(v.error_bound <= 1e-6 && v.contains(-0.5), "{v:?}");
        let v = eval_fourier(2, 0.5, 1e-8, Domain::Principal).unwrap();
        assert!(v.error_bound <= 1e-8 && v.contains(-0.25), "{v:?}");
        let v = eval_fourier(3, 0.0, 1e-8, Domain::Principal).unwrap();
        assert!(v.error_bound <= 1e-8 && v.contains(0.25), "{v:?}");
    }

    #[test]
    fn tail_bound_properties() {
        for m in 1..=6 {
            for n in [0u64, 1, 10, 1000] {
                assert!(tail_bound(m, n + 1) < tail_bound(m, n));
            }
        }
        let b = tail_bound(1, 10_000);
        let formula = 4.0 / (PI * PI) / (2.0 * 20001.0);
        assert!(b >= formula && b <= formula * (1.0 + 1e-12));
        assert!(b < 1.1e-5);
    }

    #[test]
    fn tail_bound_dominates_partial_tail() {
        for (m, n) in [(1usize, 10u64), (1, 1000), (2, 5), (3, 50), (5, 0)] {
            for x in [0.0, 0.3, 0.77] {
                let far = n + 1_000_000;
                let tail = partial_sum(m, x, far) - partial_sum(m, x, n);
                assert!(tail.abs() <= tail_bound(m, n), "m={m} n={n} x={x}");
            }
        }
    }

    #[test]
    fn grid_within_bound() {
        for m in 2..=8 {
            for i in 0..10 {
                let x = i as f64 / 10.0;
                let v = eval_fourier(m, x, 1e-8, Domain::Principal).unwrap();
                assert!(v.error_bound <= 1e-8);
                assert!(v.contains(exact(m, x)), "m={m} x={x} {v:?}");
            }
        }
    }

    #[test]
    fn antiperiodic_extension() {
        let t = EulerNumberTable::new(4);
        for m in 1..=4 {
            for x in [0.125, 0.5, 0.875] {
                let a = eval_fourier(m, x, 1e-7, Domain::Antiperiodic).unwrap();
                let b = eval_fourier(m, x + 1.0, 1e-7, Domain::Antiperiodic).unwrap();
                assert!((a.value + b.value).abs() <= a.error_bound + b.error_bound);
                let xr = ExactRational::from_f64(x + 1.0).unwrap();
                assert!(b.contains(exact_extended_value(m, &xr, &t).unwrap().to_f64()));
            }
        }
        assert_eq!(exact_extended_value(1, &rat(3, 2), &t).unwrap(), rat(0, 1));
        assert_eq!(exact_extended_value(2, &rat(-1, 2), &t).unwrap(), rat(1, 4));
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            eval_fourier(0, 0.5, 1e-6, Domain::Principal),
            Err(Error::Domain(_))
        ));
        assert!(eval_fourier(1, 1.0, 1e-6, Domain::Principal).is_err());
        assert!(eval_fourier(1, -0.1, 1e-6, Domain::Principal).is_err());
        assert!(eval_fourier(1, f64::NAN, 1e-6, Domain::Antiperiodic).is_err());
        assert!(eval_fourier(1, 0.5, 0.0, Domain::Principal).is_err());
        assert!(matches!(
            eval_fourier(1, 0.5, 1e-30, Domain::Principal),
            Err(Error::ToleranceUnreachable { .. })
        ));
    }

    #[test]
    fn square_wave_best_effort() {
        // m = 0 gives a square wave; at the midpoint it is close to 1.
        let v = partial_sum(0, 0.5, 100_000);
        assert!((v - 1.0).abs() < 1e-4);
        // At the jump the partial sums sit on the midpoint 0, not E_0(0) = 1.
        assert!(partial_sum(0, 0.0, 1000).abs() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn series_within_bound(m in 1usize..=6, x in 0.0f64..1.0) {
                let v = eval_fourier(m, x, 1e-6, Domain::Principal).unwrap();
                prop_assert!(v.error_bound <= 1e-6);
                prop_assert!(v.contains(exact(m, x)), "m={} x={} {:?}", m, x, v);
            }

            #[test]
            fn antiperiodic_continuation(m in 1usize..=6, x in -3.0f64..3.0) {
                let t = EulerNumberTable::new(6);
                let v = eval_fourier(m, x, 1e-6, Domain::Antiperiodic).unwrap();
                let xr = ExactRational::from_f64(x).unwrap();
                prop_assert!(v.contains(exact_extended_value(m, &xr, &t).unwrap().to_f64()));
            }
        }
    }
}
