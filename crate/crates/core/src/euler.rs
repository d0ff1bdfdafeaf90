//! Euler numbers `E_n` (coefficients of `t^n/n!` in `2/(e^t + 1)`), Euler
//! polynomials `E_n(x)`, and their exact algebraic identities.
//!
//! Numbers are computed once into an [`EulerNumberTable`] from the
//! recurrence `Σ_{l=0}^{n} C(n,l) E_l + E_n = 2δ_{0,n}`; every other operation
//! reads from a table passed in by the caller.

use serde::Serialize;

use crate::arith::{binomial, ExactRational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `E_0 ..= E_{n_max}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerNumberTable {
    values: Vec<ExactRational>,
}

impl EulerNumberTable {
    pub fn new(n_max: usize) -> Self {
        let half = ExactRational::new(1, 2).unwrap();
        let mut values: Vec<ExactRational> = Vec::with_capacity(n_max + 1);
        values.push(ExactRational::one());
        for n in 1..=n_max {
            // 2 E_n = -Σ_{l<n} C(n,l) E_l
            let partial: ExactRational = values
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(l, e)| e * ExactRational::from_integer(binomial(n as u64, l as u64)))
                .sum();
            values.push(-(partial * &half));
        }
        EulerNumberTable { values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    /// `E_n`, or an error if the table is too short.
    pub fn get(&self, n: usize) -> Result<&ExactRational> {
        self.values.get(n).ok_or(Error::TableTooShort {
            needed: n,
            available: self.n_max(),
        })
    }

    fn require(&self, n: usize) -> Result<()> {
        self.get(n).map(|_| ())
    }

    /// `Σ_{l=0}^{n} C(n,l) E_l + E_n`; equals `2δ_{0,n}` for every `n` in the table.
    pub fn recurrence_lhs(&self, n: usize) -> Result<ExactRational> {
        self.require(n)?;
        let s: ExactRational = (0..=n)
            .map(|l| &self.values[l] * ExactRational::from_integer(binomial(n as u64, l as u64)))
            .sum();
        Ok(s + &self.values[n])
    }
}

/// Euler numbers `E_0 ..= E_{n_max}`.
pub fn euler_numbers(n_max: usize) -> EulerNumberTable {
    EulerNumberTable::new(n_max)
}

/// `E_n(x) = Σ_l C(n,l) E_l x^{n-l}`: monic of degree `n` with constant term `E_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerPolynomial {
    degree: usize,
    poly: Polynomial,
}

impl EulerPolynomial {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        self.poly.coeffs()
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.poly.eval(x)
    }

    pub fn derivative(&self) -> Polynomial {
        self.poly.derivative()
    }
}

pub fn euler_polynomial(n: usize, table: &EulerNumberTable) -> Result<EulerPolynomial> {
    table.require(n)?;
    let mut coeffs = vec![ExactRational::zero(); n + 1];
    for (l, e) in table.values[..=n].iter().enumerate() {
        coeffs[n - l] = e * ExactRational::from_integer(binomial(n as u64, l as u64));
    }
    let poly = Polynomial::new(coeffs);
    debug_assert_eq!(poly.degree(), Some(n));
    debug_assert!(poly.coeff(n).is_one());
    Ok(EulerPolynomial { degree: n, poly })
}

/// Exact value of `E_n(x)`.
pub fn eval(poly: &EulerPolynomial, x: &ExactRational) -> ExactRational {
    poly.eval(x)
}

/// Coefficient-wise derivative; equals `n · E_{n-1}(x)`.
pub fn derivative(poly: &EulerPolynomial) -> Polynomial {
    poly.derivative()
}

/// `∫_0^x E_n(t) dt = (E_{n+1}(x) - E_{n+1}) / (n+1)`.
///
/// The constant `-E_{n+1}/(n+1)` is what makes the value at zero vanish. It
/// is zero for odd `n`, where the result is simply `E_{n+1}(x)/(n+1)`.
pub fn antiderivative_from_zero(n: usize, table: &EulerNumberTable) -> Result<Polynomial> {
    let next = euler_polynomial(n + 1, table)?;
    let e_next = Polynomial::constant(table.get(n + 1)?.clone());
    let scale = ExactRational::new(1, n as i64 + 1)?;
    Ok((next.as_polynomial() - &e_next).scale(&scale))
}

/// `E_{n+1}(x)/(n+1)` with no integration constant. This is the antiderivative
/// from zero only when `E_{n+1} = 0`; kept so the discrepancy can be reported.
pub fn antiderivative_without_constant(n: usize, table: &EulerNumberTable) -> Result<Polynomial> {
    let next = euler_polynomial(n + 1, table)?;
    Ok(next
        .as_polynomial()
        .scale(&ExactRational::new(1, n as i64 + 1)?))
}

/// `Σ_{k=0}^{d-1} (-1)^k E_n((x+k)/d) - d^{-n} E_n(x)` as an exact polynomial.
/// Zero for every `n` and odd `d`.
pub fn distribution_residual(n: usize, d: u64, table: &EulerNumberTable) -> Result<Polynomial> {
    if d.is_multiple_of(2) {
        return Err(Error::EvenModulus(d));
    }
    let en = euler_polynomial(n, table)?;
    let divisor = ExactRational::from_integer(d as i64);
    let mut acc = Polynomial::zero();
    for k in 0..d {
        let term = en
            .as_polynomial()
            .compose_shift_scale(&ExactRational::from_integer(k as i64), &divisor);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    let rhs = en.as_polynomial().scale(&divisor.pow(-(n as i32))?);
    Ok(&acc - &rhs)
}

/// `E_n(1)`, checked against `-E_n`. Only defined for `n ≥ 1`.
pub fn euler_at_one(n: usize, table: &EulerNumberTable) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::Domain(
            "E_n(1) = -E_n needs n >= 1 (E_0(1) = 1 = E_0)".into(),
        ));
    }
    let value = euler_polynomial(n, table)?.eval(&ExactRational::one());
    let expected = -table.get(n)?;
    if value != expected {
        return Err(Error::IdentityViolated(format!(
            "E_{n}(1) = {value} but -E_{n} = {expected}"
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, rat};

    /// Taylor coefficients of 2/(e^t + 1) by power-series inversion of
    /// (e^t + 1)/2 = 1 + Σ_{k≥1} t^k/(2·k!), then scaled by n!.
    fn generating_function_oracle(n_max: usize) -> Vec<ExactRational> {
        let d: Vec<ExactRational> = (0..=n_max)
            .map(|k| {
                if k == 0 {
                    ExactRational::one()
                } else {
                    ExactRational::one() / ExactRational::from_integer(factorial(k as u64) * 2)
                }
            })
            .collect();
        let mut inv: Vec<ExactRational> = vec![ExactRational::one()];
        for n in 1..=n_max {
            let s: ExactRational = (1..=n).map(|k| &d[k] * &inv[n - k]).sum();
            inv.push(-s);
        }
        inv.into_iter()
            .enumerate()
            .map(|(n, c)| c * ExactRational::from_integer(factorial(n as u64)))
            .collect()
    }

    #[test]
    fn first_values() {
        let t = euler_numbers(3);
        assert_eq!(t.values(), &[rat(1, 1), rat(-1, 2), rat(0, 1), rat(1, 4)]);
    }

    #[test]
    fn matches_generating_function() {
        let t = euler_numbers(40);
        let oracle = generating_function_oracle(40);
        assert_eq!(t.values(), oracle.as_slice());
        assert_eq!(t.get(5).unwrap(), &rat(-1, 2));
        assert_eq!(t.get(7).unwrap(), &rat(17, 8));
        assert_eq!(t.get(9).unwrap(), &rat(-31, 2));
    }

    #[test]
    fn recurrence_and_parity() {
        let t = euler_numbers(60);
        assert_eq!(t.recurrence_lhs(0).unwrap(), rat(2, 1));
        for n in 1..=60 {
            assert!(t.recurrence_lhs(n).unwrap().is_zero(), "n = {n}");
        }
        for k in 1..=30 {
            assert!(t.get(2 * k).unwrap().is_zero());
        }
    }

    #[test]
    fn polynomial_small_degrees() {
        let t = euler_numbers(5);
        let p = |n| euler_polynomial(n, &t).unwrap().into_polynomial();
        assert_eq!(p(0), Polynomial::constant(rat(1, 1)));
        assert_eq!(p(1).coeffs(), &[rat(-1, 2), rat(1, 1)]);
        assert_eq!(p(2).coeffs(), &[rat(0, 1), rat(-1, 1), rat(1, 1)]);
        for n in 0..=5 {
            let e = euler_polynomial(n, &t).unwrap();
            assert_eq!(e.degree(), n);
            assert!(e.coeffs()[n].is_one());
            assert_eq!(&e.coeffs()[0], t.get(n).unwrap());
        }
    }

    #[test]
    fn table_too_short() {
        let t = euler_numbers(3);
        assert_eq!(
            euler_polynomial(4, &t),
            Err(Error::TableTooShort {
                needed: 4,
                available: 3
            })
        );
        assert!(antiderivative_from_zero(3, &t).is_err());
    }

    #[test]
    fn evaluation() {
        let t = euler_numbers(10);
        let e1 = euler_polynomial(1, &t).unwrap();
        assert_eq!(eval(&e1, &rat(1, 1)), rat(1, 2));
        assert_eq!(eval(&e1, &rat(1, 2)), rat(0, 1));
        let e2 = euler_polynomial(2, &t).unwrap();
        assert_eq!(eval(&e2, &rat(1, 2)), rat(-1, 4));
        for n in 0..=10 {
            let e = euler_polynomial(n, &t).unwrap();
            assert_eq!(&eval(&e, &ExactRational::zero()), t.get(n).unwrap());
        }
    }

    #[test]
    fn derivative_identity() {
        let t = euler_numbers(40);
        let e0 = euler_polynomial(0, &t).unwrap();
        assert!(derivative(&e0).is_zero());
        let e2 = euler_polynomial(2, &t).unwrap();
        assert_eq!(derivative(&e2).coeffs(), &[rat(-1, 1), rat(2, 1)]);
        for n in 1..=40 {
            let lhs = derivative(&euler_polynomial(n, &t).unwrap());
            let rhs = euler_polynomial(n - 1, &t)
                .unwrap()
                .as_polynomial()
                .scale(&ExactRational::from_integer(n as i64));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn antiderivative_cases() {
        let t = euler_numbers(41);
        assert_eq!(
            antiderivative_from_zero(0, &t).unwrap(),
            Polynomial::identity()
        );
        let a1 = antiderivative_from_zero(1, &t).unwrap();
        assert_eq!(a1.coeffs(), &[rat(0, 1), rat(-1, 2), rat(1, 2)]);
        assert_eq!(a1, antiderivative_without_constant(1, &t).unwrap());
        // The constant-free form misses by -E_1 = 1/2 at n = 0.
        let verbatim = antiderivative_without_constant(0, &t).unwrap();
        assert_eq!(verbatim.coeffs(), &[rat(-1, 2), rat(1, 1)]);
        for n in 0..=40 {
            let a = antiderivative_from_zero(n, &t).unwrap();
            let en = euler_polynomial(n, &t).unwrap();
            assert_eq!(&a.derivative(), en.as_polynomial(), "n = {n}");
            assert!(a.eval(&ExactRational::zero()).is_zero());
            assert_eq!(a, en.as_polynomial().integral());
        }
    }

    #[test]
    fn distribution_relation() {
        let t = euler_numbers(12);
        for n in 0..=12 {
            for d in [1, 3, 5, 7] {
                assert!(
                    distribution_residual(n, d, &t).unwrap().is_zero(),
                    "n={n} d={d}"
                );
            }
        }
        assert_eq!(distribution_residual(2, 2, &t), Err(Error::EvenModulus(2)));
    }

    #[test]
    fn distribution_n2_d3_by_hand() {
        // E_2(y) = y^2 - y; Σ_k (-1)^k E_2((x+k)/3) = (x^2 - x)/9.
        let t = euler_numbers(2);
        let e2 = euler_polynomial(2, &t).unwrap();
        let x = rat(5, 11);
        let direct: ExactRational = (0..3)
            .map(|k| {
                let y = (&x + rat(k, 1)) / rat(3, 1);
                let v = &y * &y - &y;
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum();
        assert_eq!(direct, (&x * &x - &x) / rat(9, 1));
        assert_eq!(direct, e2.eval(&x) / rat(9, 1));
    }

    #[test]
    fn reflection_at_one() {
        let t = euler_numbers(40);
        assert_eq!(euler_at_one(1, &t).unwrap(), rat(1, 2));
        assert_eq!(euler_at_one(2, &t).unwrap(), rat(0, 1));
        assert_eq!(euler_at_one(7, &t).unwrap(), rat(-17, 8));
        for n in 1..=40 {
            assert_eq!(&euler_at_one(n, &t).unwrap(), &-t.get(n).unwrap());
        }
        assert!(matches!(euler_at_one(0, &t), Err(Error::Domain(_))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn x_strategy() -> impl Strategy<Value = ExactRational> {
            (-200i64..=200, 1i64..=60).prop_map(|(p, q)| rat(p, q))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(256))]

            #[test]
            fn reflection(n in 0usize..=24, x in x_strategy()) {
                let t = euler_numbers(24);
                let e = euler_polynomial(n, &t).unwrap();
                let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                prop_assert_eq!(e.eval(&(rat(1, 1) - &x)), sign * e.eval(&x));
            }

            #[test]
            fn shift_by_one(n in 0usize..=24, x in x_strategy()) {
                let t = euler_numbers(24);
                let e = euler_polynomial(n, &t).unwrap();
                let lhs = e.eval(&(&x + rat(1, 1))) + e.eval(&x);
                prop_assert_eq!(lhs, rat(2, 1) * x.pow(n as i32).unwrap());
            }

            #[test]
            fn antiderivative_matches_integral(n in 0usize..=24, x in x_strategy()) {
                let t = euler_numbers(25);
                let a = antiderivative_from_zero(n, &t).unwrap();
                let e = euler_polynomial(n, &t).unwrap();
                prop_assert_eq!(a.eval(&x), e.as_polynomial().integral().eval(&x));
            }
        }
    }
}
