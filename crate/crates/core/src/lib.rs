//! Exact Euler numbers and polynomials, the Fourier series of the Euler
//! functions, odd-denominator power sums, and the connection between Euler
//! numbers and second-kind Stirling numbers.
//!
//! Algebraic identities are checked in exact rational arithmetic
//! ([`arith::ExactRational`]); series are evaluated in double precision with
//! a rigorous error bound ([`fourier::ApproxValue`]). The [`verify`] module
//! runs every check and reports the result of each one.

// `!(a <= b)` is used on purpose so NaN falls on the rejecting side.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
pub mod error;
pub mod euler;
pub mod fourier;
pub mod poly;
pub mod report;
pub mod stirling;
pub mod verify;

pub use arith::{binomial, factorial, ExactInteger, ExactRational};
pub use error::{Error, Result};
pub use euler::{euler_numbers, euler_polynomial, EulerNumberTable, EulerPolynomial};
pub use fourier::{ApproxValue, Domain, FourierCoefficient};
pub use poly::Polynomial;
pub use report::{format_float, IdentityReport, Witness};
pub use stirling::StirlingTable;
