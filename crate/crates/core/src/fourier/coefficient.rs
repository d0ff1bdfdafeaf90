use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{factorial, ExactRational};
use crate::error::{Error, Result};
use crate::euler::{euler_polynomial, EulerNumberTable};

/// Largest order accepted by the quadrature oracle.
pub const MAX_QUADRATURE_ORDER: usize = 12;
pub const MIN_SUBDIVISIONS: usize = 64;

/// `a_n^(m) = rational · π^(-pi_power) · i^(-i_power)` with
/// `pi_power = m + 1` and `i_power = (m + 1) mod 4`.
///
/// For every `m ≥ 0`, `a_n^(m) = 2·m! / ((2n+1)πi)^(m+1)`, so
/// `rational = 2·m!/(2n+1)^(m+1)` and the sign of `2n+1` lives in `rational`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourierCoefficient {
    pub rational: ExactRational,
    pub pi_power: u32,
    pub i_power: u8,
}

impl FourierCoefficient {
    /// Numerical value as a complex number.
    pub fn to_complex(&self) -> Complex64 {
        let magnitude = self.rational.to_f64() / PI.powi(self.pi_power as i32);
        // i^(-k): 1, -i, -1, i
        match self.i_power % 4 {
            0 => Complex64::new(magnitude, 0.0),
            1 => Complex64::new(0.0, -magnitude),
            2 => Complex64::new(-magnitude, 0.0),
            _ => Complex64::new(0.0, magnitude),
        }
    }
}

/// Exact `a_n^(m) = ∫_0^1 E_m(x) e^{-(2n+1)πix} dx`.
pub fn fourier_coefficient(m: usize, n: i64) -> FourierCoefficient {
    let p = m as u32 + 1;
    let odd = BigInt::from(2 * n + 1);
    let rational =
        ExactRational::new(factorial(m as u64) * 2, odd.pow(p)).expect("2n+1 is never zero");
    FourierCoefficient {
        rational,
        pi_power: p,
        i_power: (p % 4) as u8,
    }
}

fn check_quadrature_args(m: usize, subdivisions: usize) -> Result<()> {
    if m > MAX_QUADRATURE_ORDER {
        return Err(Error::Domain(format!(
            "quadrature oracle supports m <= {MAX_QUADRATURE_ORDER}, got {m}"
        )));
    }
    if subdivisions < MIN_SUBDIVISIONS || !subdivisions.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "subdivisions must be even and >= {MIN_SUBDIVISIONS}, got {subdivisions}"
        )));
    }
    Ok(())
}

fn simpson(n: i64, subdivisions: usize, poly: &[f64]) -> Complex64 {
    let omega = (2 * n + 1) as f64 * PI;
    let h = 1.0 / subdivisions as f64;
    let f = |x: f64| {
        let e = poly.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let (s, c) = (omega * x).sin_cos();
        Complex64::new(e * c, -e * s)
    };
    let mut acc = f(0.0) + f(1.0);
    for k in 1..subdivisions {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(k as f64 * h) * w;
    }
    acc * (h / 3.0)
}

fn float_coeffs(m: usize) -> Vec<f64> {
    let table = EulerNumberTable::new(m);
    euler_polynomial(m, &table)
        .expect("table covers m")
        .coeffs()
        .iter()
        .map(ExactRational::to_f64)
        .collect()
}

/// Composite Simpson approximation of `∫_0^1 E_m(x) e^{-(2n+1)πix} dx`.
/// Cross-check oracle for [`fourier_coefficient`].
pub fn fourier_coefficient_by_quadrature(
    m: usize,
    n: i64,
    subdivisions: usize,
) -> Result<Complex64> {
    check_quadrature_args(m, subdivisions)?;
    Ok(simpson(n, subdivisions, &float_coeffs(m)))
}

/// Richardson estimate `|S(h) - S(2h)| / 15` of the Simpson error at the
/// given subdivision count.
pub fn quadrature_error_estimate(m: usize, n: i64, subdivisions: usize) -> Result<f64> {
    check_quadrature_args(m, subdivisions)?;
    let coeffs = float_coeffs(m);
    let fine = simpson(n, subdivisions, &coeffs);
    let coarse = simpson(n, subdivisions / 2, &coeffs);
    Ok((fine - coarse).norm() / 15.0)
}
