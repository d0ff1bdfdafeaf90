//! Second-kind Stirling numbers and the Euler–Stirling identity.
//!
//! Expanding `1/(1 + e^{-x}) = Σ_n (-1)^n e^{-nx}` term by term interchanges
//! two sums, one of which diverges. Read in the Abel sense the expansion is
//! valid, and the coefficient of `x^m/m!` gives
//!
//! ```text
//! E_m = 2 · Abel Σ_{n≥0} (-1)^n n^m = Σ_{k=0}^{m} (-1)^k k! S(m,k) / 2^k
//! ```
//!
//! The form `E_m = 2 Σ_k (-1)^k k! S(m,k)` (without the `2^{-k}` weight) does
//! not hold; [`verify_stirling_identity`] reports both.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, ExactInteger, ExactRational};
use crate::error::{Error, Result};
use crate::euler::EulerNumberTable;
use crate::report::IdentityReport;

/// Triangle `S(m, n)` for `0 ≤ n ≤ m ≤ m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<ExactInteger>>,
}

impl StirlingTable {
    pub fn new(m_max: usize) -> Self {
        let mut rows: Vec<Vec<ExactInteger>> = vec![vec![BigInt::one()]];
        for m in 1..=m_max {
            let prev = &rows[m - 1];
            let mut row = vec![BigInt::zero(); m + 1];
            for n in 1..=m {
                let carry = if n < m { &prev[n] * n } else { BigInt::zero() };
                row[n] = carry + &prev[n - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn m_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(m, n)`; zero when `n > m`.
    pub fn get(&self, m: usize, n: usize) -> Result<ExactInteger> {
        let row = self.row(m)?;
        Ok(row.get(n).cloned().unwrap_or_default())
    }

    pub fn row(&self, m: usize) -> Result<&[ExactInteger]> {
        self.rows
            .get(m)
            .map(Vec::as_slice)
            .ok_or(Error::TableTooShort {
                needed: m,
                available: self.m_max(),
            })
    }
}

/// `S(m, n)` by the triangular recurrence `S(m,n) = n S(m-1,n) + S(m-1,n-1)`.
pub fn stirling2(m: usize, n: usize) -> ExactInteger {
    if n > m {
        return BigInt::zero();
    }
    // Only columns 0..=n are needed.
    let mut col = vec![BigInt::zero(); n + 1];
    col[0] = BigInt::one();
    for i in 1..=m {
        for k in (1..=n.min(i)).rev() {
            col[k] = &col[k] * k + &col[k - 1];
        }
        col[0] = BigInt::zero();
    }
    col[n].clone()
}

/// `S(m, n)` as the multinomial sum over all `(a_1, …, a_m)` with
/// `Σ j·a_j = m` and `Σ a_j = n` of `m! / Π_j (a_j! · (j!)^{a_j})`.
pub fn stirling2_multinomial(m: usize, n: usize) -> ExactInteger {
    if n > m {
        return BigInt::zero();
    }
    let m_fact = factorial(m as u64);
    let facts: Vec<ExactInteger> = (0..=m).map(|k| factorial(k as u64)).collect();
    let mut counts = vec![0usize; m + 1];
    let mut total = BigInt::zero();
    multinomial_dfs(1, m, n, &mut counts, &facts, &m_fact, &mut total);
    total
}

fn multinomial_dfs(
    j: usize,
    weight_left: usize,
    parts_left: usize,
    counts: &mut [usize],
    facts: &[ExactInteger],
    m_fact: &ExactInteger,
    total: &mut ExactInteger,
) {
    if weight_left == 0 && parts_left == 0 {
        let mut denom = BigInt::one();
        for (size, &a) in counts.iter().enumerate().skip(1) {
            if a > 0 {
                denom *= &facts[a] * num_traits::pow(facts[size].clone(), a);
            }
        }
        *total += m_fact / denom;
        return;
    }
    if j >= counts.len() || parts_left == 0 {
        return;
    }
    // Every remaining part has size ≥ j.
    if weight_left < parts_left * j {
        return;
    }
    let max_a = (weight_left / j).min(parts_left);
    for a in 0..=max_a {
        let (w, p) = (weight_left - a * j, parts_left - a);
        // The other parts have size > j.
        if p > 0 && w < p * (j + 1) {
            continue;
        }
        if p == 0 && w > 0 {
            continue;
        }
        counts[j] = a;
        multinomial_dfs(j + 1, w, p, counts, facts, m_fact, total);
    }
    counts[j] = 0;
}

/// Closed form of `Σ_{n≥0} (-1)^n n^m t^n = Σ_k S(m,k) k! (-t)^k / (1+t)^{k+1}`.
/// Exact for `|t| < 1`; at `t = 1` it is the Abel limit.
pub fn alternating_power_generating_function(
    m: usize,
    t: &ExactRational,
    table: &StirlingTable,
) -> Result<ExactRational> {
    let row = table.row(m)?;
    let one_plus_t = ExactRational::one() + t;
    if one_plus_t.is_zero() {
        return Err(Error::Domain("closed form has a pole at t = -1".into()));
    }
    let ratio = -t / &one_plus_t;
    let mut ratio_pow = one_plus_t.recip()?;
    let mut acc = ExactRational::zero();
    for (k, s) in row.iter().enumerate() {
        if !s.is_zero() {
            acc += ExactRational::from_integer(s * factorial(k as u64)) * &ratio_pow;
        }
        ratio_pow *= &ratio;
    }
    Ok(acc)
}

/// Abel sum of `Σ_{n≥0} (-1)^n n^m`: `Σ_k S(m,k) (-1)^k k! / 2^{k+1}`.
pub fn abel_sum_alternating_power(m: usize, table: &StirlingTable) -> Result<ExactRational> {
    let row = table.row(m)?;
    let mut acc = ExactRational::zero();
    let mut half_pow = ExactRational::new(1, 2)?;
    let half = half_pow.clone();
    for (k, s) in row.iter().enumerate() {
        let term = ExactRational::from_integer(s * factorial(k as u64)) * &half_pow;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
        half_pow *= &half;
    }
    Ok(acc)
}

/// `2 Σ_{n=0}^{m} (-1)^n n! S(m,n)`: the identity as printed, truncated where
/// `S(m,n)` vanishes.
pub fn unweighted_identity_rhs(m: usize, table: &StirlingTable) -> Result<ExactRational> {
    let row = table.row(m)?;
    let sum: ExactInteger = row
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let v = s * factorial(n as u64);
            if n % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum();
    Ok(ExactRational::from_integer(sum * 2))
}

/// `Σ_{k=0}^{m} (-1)^k k! S(m,k) / 2^k`, equal to `E_m` and to
/// `2 · abel_sum_alternating_power(m)`.
pub fn corrected_identity_rhs(m: usize, table: &StirlingTable) -> Result<ExactRational> {
    Ok(abel_sum_alternating_power(m, table)? * ExactRational::from_integer(2))
}

/// Label of the identity without the `2^{-k}` weight.
pub const UNWEIGHTED_STIRLING_IDENTITY: &str = "E_m = 2 Σ_n (-1)^n n! S(m,n)";
/// Label of the Abel-weighted identity.
pub const CORRECTED_STIRLING_IDENTITY: &str = "E_m = Σ_k (-1)^k k! S(m,k) / 2^k";

/// Checks both forms against `E_m` for `0 ≤ m ≤ m_max`: the printed form
/// first, then the corrected one.
pub fn verify_stirling_identity(m_max: usize) -> (IdentityReport, IdentityReport) {
    let euler = EulerNumberTable::new(m_max);
    let stirling = StirlingTable::new(m_max);
    let e = |m: i64| euler.get(m as usize).expect("table covers m_max").clone();
    let unweighted =
        IdentityReport::check_exact(UNWEIGHTED_STIRLING_IDENTITY, 0..=m_max as i64, |m| {
            (
                e(m),
                unweighted_identity_rhs(m as usize, &stirling).expect("table covers m_max"),
            )
        });
    let corrected =
        IdentityReport::check_exact(CORRECTED_STIRLING_IDENTITY, 0..=m_max as i64, |m| {
            (
                e(m),
                corrected_identity_rhs(m as usize, &stirling).expect("table covers m_max"),
            )
        });
    (unweighted, corrected)
}
