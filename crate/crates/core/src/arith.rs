//! Exact integer and rational arithmetic plus the combinatorial primitives
//! (factorials, binomial coefficients) the rest of the crate is built on.
//!
//! Integers are [`num_bigint::BigInt`]. Rationals are a thin newtype over
//! [`num_rational::BigRational`] that is always stored in lowest terms with a
//! positive denominator, so two equal values are also structurally equal.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type ExactInteger = BigInt;

/// `n!`
pub fn factorial(n: u64) -> ExactInteger {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, l)`; zero when `l > n`.
pub fn binomial(n: u64, l: u64) -> ExactInteger {
    if l > n {
        return BigInt::zero();
    }
    let l = l.min(n - l);
    // Each partial product C(n, i) is an integer, so the division is exact.
    let mut acc = BigInt::one();
    for i in 0..l {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Normalized arbitrary-precision fraction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// `numerator / denominator`, reduced to lowest terms.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self::from_ratio(BigRational::from_integer(value.into()))
    }

    /// Exact value of a finite double.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Self::from_ratio)
    }

    fn from_ratio(r: BigRational) -> Self {
        let out = ExactRational(r);
        debug_assert!(out.is_normalized(), "non-normalized rational {out:?}");
        out
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self::from_ratio(self.0.abs())
    }

    /// Denominator positive and `gcd(|numerator|, denominator) = 1`.
    pub fn is_normalized(&self) -> bool {
        let (n, d) = (self.0.numer(), self.0.denom());
        d.is_positive() && n.abs().gcd(d).is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents of zero are a division by zero.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(num_traits::Pow::pow(&self.0, exp)))
    }

    /// Nearest double (ties per `num-rational`); may be infinite for huge values.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for ExactRational {
    /// `p/q`, with `/q` omitted when `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `p/q`, integers, and decimals with an optional exponent
    /// (`0.5`, `-1.25e-3`). Decimals are read exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational {
            input: s.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return Self::new(p, q).map_err(|e| match e {
                Error::DivisionByZero => Error::DivisionByZero,
                _ => bad(),
            });
        }

        let (mantissa, exponent) = match t.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = t[i + 1..].parse().map_err(|_| bad())?;
                (&t[..i], e)
            }
            None => (t, 0),
        };
        let (negative, digits) = match mantissa.as_bytes().first() {
            Some(b'-') => (true, &mantissa[1..]),
            Some(b'+') => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let all_digits = format!("{int_part}{frac_part}");
        let mut numer: BigInt = all_digits.parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let scale = exponent - i32::try_from(frac_part.len()).map_err(|_| bad())?;
        let ten = ExactRational::from_integer(10);
        Ok(ExactRational::from_integer(numer) * ten.pow(scale)?)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigInt> for ExactRational {
    fn from(v: BigInt) -> Self {
        Self::from_integer(v)
    }
}

impl From<&BigInt> for ExactRational {
    fn from(v: &BigInt) -> Self {
        Self::from_integer(v.clone())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational::from_ratio(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational::from_ratio(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational::from_ratio((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational::from_ratio((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer operator; use
// `ExactRational::checked_div` to get an error instead.
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational::from_ratio(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational::from_ratio(-&self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactRational {
    fn add_assign(&mut self, rhs: ExactRational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactRational {
    fn product<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

/// Shorthand for `p/q` literals in tests and tables. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p, q).expect("zero denominator")
}
