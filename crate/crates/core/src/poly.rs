//! Dense polynomials with exact rational coefficients, constant term first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::arith::{binomial, ExactRational};

/// `coeffs[j]` multiplies `x^j`. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(ExactRational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn identity() -> Self {
        Self::new(vec![ExactRational::zero(), ExactRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> ExactRational {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * ExactRational::from_integer(j as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at zero.
    pub fn integral(&self) -> Polynomial {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(ExactRational::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            out.push(c / ExactRational::from_integer(j as i64 + 1));
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &ExactRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p((x + shift) / divisor)`, expanding each `((x + shift)/divisor)^j`
    /// binomially. `divisor` must be nonzero.
    pub fn compose_shift_scale(
        &self,
        shift: &ExactRational,
        divisor: &ExactRational,
    ) -> Polynomial {
        let inv = divisor.recip().expect("nonzero divisor");
        let mut out = vec![ExactRational::zero(); self.coeffs.len()];
        let mut inv_pow = ExactRational::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let lead = c * &inv_pow;
                // (x + shift)^j = Σ_i C(j,i) shift^(j-i) x^i
                let mut shift_pow = ExactRational::one();
                for i in (0..=j).rev() {
                    let b = ExactRational::from_integer(binomial(j as u64, i as u64));
                    out[i] += &lead * b * &shift_pow;
                    shift_pow *= shift;
                }
            }
            inv_pow *= &inv;
        }
        Polynomial::new(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Human-readable form, highest power first: `x^2 - x + 1/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = j == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || j == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn poly(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(c.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(poly(&[(0, 1)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn horner_and_calculus() {
        // x^2 - x
        let p = poly(&[(0, 1), (-1, 1), (1, 1)]);
        assert_eq!(p.eval(&rat(1, 2)), rat(-1, 4));
        assert_eq!(p.eval_f64(0.5), -0.25);
        assert_eq!(p.derivative(), poly(&[(-1, 1), (2, 1)]));
        assert_eq!(p.integral(), poly(&[(0, 1), (0, 1), (-1, 2), (1, 3)]));
        assert_eq!(p.integral().derivative(), p);
    }

    #[test]
    fn composition_matches_direct_evaluation() {
        let p = poly(&[(3, 7), (-1, 2), (0, 1), (5, 3)]);
        let shift = rat(2, 1);
        let div = rat(3, 1);
        let q = p.compose_shift_scale(&shift, &div);
        for x in [rat(0, 1), rat(1, 5), rat(-7, 4), rat(11, 1)] {
            assert_eq!(q.eval(&x), p.eval(&((&x + &shift) / &div)));
        }
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[(1, 1), (1, 1)]);
        let b = poly(&[(-1, 1), (1, 1)]);
        assert_eq!(&a * &b, poly(&[(-1, 1), (0, 1), (1, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &(-&b), poly(&[(2, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(0, 1), (-1, 1), (1, 1)]).to_string(), "x^2 - x");
        assert_eq!(poly(&[(-1, 2), (1, 1)]).to_string(), "x - 1/2");
        assert_eq!(
            poly(&[(1, 4), (0, 1), (-3, 2), (1, 1)]).to_string(),
            "x^3 - (3/2)x^2 + 1/4"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(poly(&[(-1, 1)]).to_string(), "-1");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = ExactRational> {
            (-50i64..=50, 1i64..=20).prop_map(|(p, q)| rat(p, q))
        }

        fn polynomial() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec(rational(), 0..7).prop_map(Polynomial::new)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(512))]

            #[test]
            fn evaluation_is_a_ring_map(p in polynomial(), q in polynomial(), x in rational()) {
                prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
                prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
                prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            }

            #[test]
            fn leibniz_rule(p in polynomial(), q in polynomial()) {
                let lhs = (&p * &q).derivative();
                let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn integral_inverts_derivative(p in polynomial()) {
                let i = p.integral();
                prop_assert_eq!(i.derivative(), p);
                prop_assert!(i.eval(&ExactRational::zero()).is_zero());
            }

            #[test]
            fn shift_scale_composition(p in polynomial(), k in -5i64..=5, d in 1i64..=7, x in rational()) {
                let (k, d) = (rat(k, 1), rat(d, 1));
                let composed = p.compose_shift_scale(&k, &d);
                prop_assert_eq!(composed.eval(&x), p.eval(&((&x + &k) / &d)));
            }
        }
    }
}
