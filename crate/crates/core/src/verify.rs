//! Verification harness: runs every identity check over configurable index
//! ranges and classifies each result.
//!
//! Two identities are known not to hold as usually printed and are marked
//! [`Expectation::ExpectedFail`]: the antiderivative `E_{n+1}(x)/(n+1)`
//! without its integration constant, and the Euler–Stirling sum without the
//! `2^{-k}` weight. The odd-power sum starting at `n = 1` is reported the same
//! way. None of them affect [`all_passed`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::ExactRational;
use crate::euler::{
    antiderivative_from_zero, antiderivative_without_constant, derivative, distribution_residual,
    euler_polynomial, EulerNumberTable,
};
use crate::fourier::{
    eval_fourier, fourier_coefficient, fourier_coefficient_by_quadrature, lambda_closed_form,
    lambda_numeric, probe_odd_power_index_start, Domain, IndexStartProbe, MAX_INDEX_START_ORDER,
    MAX_QUADRATURE_ORDER,
};
use crate::poly::Polynomial;
use crate::report::IdentityReport;
use crate::stirling::{
    corrected_identity_rhs, stirling2_multinomial, verify_stirling_identity, StirlingTable,
};

/// Which group of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Recurrence,
    Calculus,
    Distribution,
    Fourier,
    Lambda,
    Stirling,
}

impl Suite {
    pub const GROUPS: [Suite; 6] = [
        Suite::Recurrence,
        Suite::Calculus,
        Suite::Distribution,
        Suite::Fourier,
        Suite::Lambda,
        Suite::Stirling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Recurrence => "recurrence",
            Suite::Calculus => "calculus",
            Suite::Distribution => "distribution",
            Suite::Fourier => "fourier",
            Suite::Lambda => "lambda",
            Suite::Stirling => "stirling",
        }
    }

    /// `(default, cap)` for the index bound used by this group.
    pub fn range_limits(self) -> (usize, usize) {
        match self {
            Suite::All => (0, 0),
            Suite::Recurrence => (60, 200),
            Suite::Calculus => (40, 100),
            Suite::Distribution => (12, 16),
            Suite::Fourier => (8, 8),
            Suite::Lambda => (2, MAX_INDEX_START_ORDER),
            Suite::Stirling => (30, 200),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::GROUPS
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|g| g.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Holds,
    ExpectedFail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFail,
    /// An identity expected to fail held; reported, but not an error.
    UnexpectedPass,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "XFAIL",
            Status::UnexpectedPass => "XPASS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyEntry {
    pub suite: Suite,
    #[serde(flatten)]
    pub report: IdentityReport,
    pub expectation: Expectation,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyEntry {
    fn new(suite: Suite, report: IdentityReport, expectation: Expectation) -> Self {
        let status = match (expectation, report.holds) {
            (Expectation::Holds, true) => Status::Pass,
            (Expectation::Holds, false) => Status::Fail,
            (Expectation::ExpectedFail, false) => Status::ExpectedFail,
            (Expectation::ExpectedFail, true) => Status::UnexpectedPass,
        };
        VerifyEntry {
            suite,
            report,
            expectation,
            status,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// `max` overrides each group's default index bound, clamped to its cap.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub max: Option<usize>,
}

impl VerifyOptions {
    fn bound(&self, suite: Suite) -> usize {
        let (default, cap) = suite.range_limits();
        self.max.unwrap_or(default).min(cap)
    }
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Vec<VerifyEntry> {
    match suite {
        Suite::All => Suite::GROUPS
            .iter()
            .flat_map(|&g| run_suite(g, options))
            .collect(),
        Suite::Recurrence => recurrence(options.bound(suite)),
        Suite::Calculus => calculus(options.bound(suite)),
        Suite::Distribution => distribution(options.bound(suite)),
        Suite::Fourier => fourier(options.bound(suite)),
        Suite::Lambda => lambda(options.bound(suite)),
        Suite::Stirling => stirling(options.bound(suite)),
    }
}

/// True when no identity expected to hold failed.
pub fn all_passed(entries: &[VerifyEntry]) -> bool {
    entries.iter().all(|e| !e.status.is_failure())
}

fn holds(suite: Suite, report: IdentityReport) -> VerifyEntry {
    VerifyEntry::new(suite, report, Expectation::Holds)
}

fn range(lo: usize, hi: usize) -> std::ops::RangeInclusive<i64> {
    lo as i64..=hi as i64
}

fn recurrence(n_max: usize) -> Vec<VerifyEntry> {
    let table = EulerNumberTable::new(n_max.max(3));
    let s = Suite::Recurrence;
    let first = [
        ExactRational::one(),
        ExactRational::new(-1, 2).unwrap(),
        ExactRational::zero(),
        ExactRational::new(1, 4).unwrap(),
    ];
    vec![
        holds(
            s,
            IdentityReport::check_exact("Σ_l C(n,l) E_l + E_n = 2δ(0,n)", range(0, n_max), |n| {
                let want = if n == 0 { 2 } else { 0 };
                (
                    table.recurrence_lhs(n as usize).unwrap(),
                    ExactRational::from_integer(want),
                )
            }),
        ),
        holds(
            s,
            IdentityReport::check_exact("E_0..E_3 = 1, -1/2, 0, 1/4", 0..=3, |n| {
                (
                    table.get(n as usize).unwrap().clone(),
                    first[n as usize].clone(),
                )
            }),
        ),
        holds(
            s,
            IdentityReport::check_exact("E_2k = 0 (k ≥ 1)", range(1, n_max / 2), |k| {
                (
                    table.get(2 * k as usize).unwrap().clone(),
                    ExactRational::zero(),
                )
            }),
        ),
    ]
}

fn calculus(n_max: usize) -> Vec<VerifyEntry> {
    let table = EulerNumberTable::new(n_max + 1);
    let s = Suite::Calculus;
    let e = |n: i64| euler_polynomial(n as usize, &table).unwrap();
    vec![
        holds(
            s,
            IdentityReport::check_exact("E_n(1) = -E_n (n ≥ 1)", range(1, n_max), |n| {
                (
                    e(n).eval(&ExactRational::one()),
                    -table.get(n as usize).unwrap(),
                )
            }),
        ),
        holds(
            s,
            IdentityReport::check_exact("d/dx E_n(x) = n E_(n-1)(x)", range(1, n_max), |n| {
                (
                    derivative(&e(n)),
                    e(n - 1)
                        .as_polynomial()
                        .scale(&ExactRational::from_integer(n)),
                )
            }),
        ),
        holds(
            s,
            IdentityReport::check_exact(
                "d/dx ∫_0^x E_n(t) dt = E_n(x), with ∫ = (E_(n+1)(x) - E_(n+1))/(n+1)",
                range(0, n_max),
                |n| {
                    let a = antiderivative_from_zero(n as usize, &table).unwrap();
                    (a.derivative(), e(n).into_polynomial())
                },
            ),
        ),
        holds(
            s,
            IdentityReport::check_exact("∫_0^0 E_n(t) dt = 0", range(0, n_max), |n| {
                let a = antiderivative_from_zero(n as usize, &table).unwrap();
                (a.eval(&ExactRational::zero()), ExactRational::zero())
            }),
        ),
        VerifyEntry::new(
            s,
            IdentityReport::check_exact(
                "∫_0^x E_n(t) dt = E_(n+1)(x)/(n+1)",
                range(0, n_max),
                |n| {
                    let a: Polynomial = e(n).as_polynomial().integral();
                    (
                        a,
                        antiderivative_without_constant(n as usize, &table).unwrap(),
                    )
                },
            ),
            Expectation::ExpectedFail,
        )
        .with_note(
            "missing integration constant -E_(n+1)/(n+1); differs whenever n is even \
             (README, Errata)",
        ),
    ]
}

fn distribution(n_max: usize) -> Vec<VerifyEntry> {
    let table = EulerNumberTable::new(n_max);
    [1u64, 3, 5, 7]
        .into_iter()
        .map(|d| {
            holds(
                Suite::Distribution,
                IdentityReport::check_exact(
                    format!("Σ_(k<{d}) (-1)^k E_n((x+k)/{d}) = {d}^(-n) E_n(x)"),
                    range(0, n_max),
                    |n| {
                        (
                            distribution_residual(n as usize, d, &table).unwrap(),
                            Polynomial::zero(),
                        )
                    },
                ),
            )
        })
        .collect()
}

/// Agreement threshold for the quadrature cross-check.
pub const QUADRATURE_TOLERANCE: f64 = 1e-8;
pub const QUADRATURE_SUBDIVISIONS: usize = 8192;
/// Requested tolerance for the Fourier-series grid.
pub const SERIES_TOLERANCE: f64 = 1e-8;

fn fourier(m_max: usize) -> Vec<VerifyEntry> {
    let s = Suite::Fourier;
    let coeff_max = m_max.min(6).min(MAX_QUADRATURE_ORDER);
    let mut out = Vec::new();

    let mut quad = IdentityReport::passed(format!(
        "|quadrature - symbolic a_n^(m)| ≤ {QUADRATURE_TOLERANCE:e}, |n| ≤ 4"
    ));
    'outer: for m in 0..=coeff_max {
        for n in -4..=4 {
            let q = fourier_coefficient_by_quadrature(m, n, QUADRATURE_SUBDIVISIONS).unwrap();
            let diff = (q - fourier_coefficient(m, n).to_complex()).norm();
            if !(diff <= QUADRATURE_TOLERANCE) {
                quad = IdentityReport::failed(quad.identity, m as i64, diff, QUADRATURE_TOLERANCE);
                break 'outer;
            }
        }
    }
    out.push(holds(s, quad));

    out.push(holds(
        s,
        IdentityReport::check_exact(
            "a_n^(m+1) = (m+1)/((2n+1)πi) a_n^(m), |n| ≤ 20",
            range(0, 20),
            |m| {
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for n in -20..=20i64 {
                    let a = fourier_coefficient(m as usize, n);
                    let b = fourier_coefficient(m as usize + 1, n);
                    lhs.push(b.rational);
                    rhs.push(a.rational * ExactRational::new(m + 1, 2 * n + 1).unwrap());
                }
                (Polynomial::new(lhs), Polynomial::new(rhs))
            },
        ),
    ));

    let table = EulerNumberTable::new(m_max.max(1));
    let mut grid = IdentityReport::passed(format!(
        "Fourier series of E_m(x) within its error bound ≤ {SERIES_TOLERANCE:e}, x ∈ {{0, 0.1, …, 0.9}}"
    ));
    'grid: for m in 1..=m_max {
        let poly = euler_polynomial(m, &table).unwrap();
        for i in 0..10 {
            let x = i as f64 / 10.0;
            let exact = poly.eval(&ExactRational::from_f64(x).unwrap()).to_f64();
            let ok = match eval_fourier(m, x, SERIES_TOLERANCE, Domain::Principal) {
                Ok(v) => v.error_bound <= SERIES_TOLERANCE && v.contains(exact),
                Err(_) => false,
            };
            if !ok {
                let value = eval_fourier(m, x, SERIES_TOLERANCE, Domain::Principal)
                    .map(|v| v.value)
                    .unwrap_or(f64::NAN);
                grid = IdentityReport::failed(grid.identity, m as i64, value, exact);
                break 'grid;
            }
        }
    }
    out.push(holds(s, grid));
    out
}

/// Agreement threshold between closed form and direct summation.
pub const LAMBDA_TOLERANCE: f64 = 1e-10;

fn lambda(m_max: usize) -> Vec<VerifyEntry> {
    let s = Suite::Lambda;
    let table = EulerNumberTable::new(2 * m_max + 1);

    let mut closed = IdentityReport::passed(format!(
        "|Σ_(n≥0) (2n+1)^(-2m-2) - c_m π^(2m+2)| ≤ {LAMBDA_TOLERANCE:e}"
    ));
    for m in 0..=m_max {
        let exp = 2 * m as u32 + 2;
        let c = lambda_closed_form(exp, &table).unwrap().to_f64() * PI.powi(exp as i32);
        let v = lambda_numeric(exp as f64, LAMBDA_TOLERANCE).unwrap();
        if !((v.value - c).abs() <= LAMBDA_TOLERANCE) {
            closed = IdentityReport::failed(closed.identity, m as i64, v.value, c);
            break;
        }
    }

    let probes: Vec<IndexStartProbe> = (0..=m_max)
        .map(|m| probe_odd_power_index_start(m).unwrap())
        .collect();
    let probe_report =
        |name: &str, matches: fn(&IndexStartProbe) -> bool, sum: fn(&IndexStartProbe) -> f64| {
            match probes.iter().find(|p| !matches(p)) {
                Some(p) => IdentityReport::failed(name, p.m as i64, sum(p), p.closed_form),
                None => IdentityReport::passed(name),
            }
        };
    let zero = probe_report(
        "Σ_(n≥0) (2n+1)^(-2m-2) = (-1)^(m+1) E_(2m+1) π^(2m+2) / (4 (2m+1)!)",
        |p| p.zero_start_matches,
        |p| p.from_zero.value,
    );
    let one = probe_report(
        "Σ_(n≥1) (2n+1)^(-2m-2) = (-1)^(m+1) E_(2m+1) π^(2m+2) / (4 (2m+1)!)",
        |p| p.one_start_matches,
        |p| p.from_one.value,
    );
    vec![
        holds(s, closed),
        holds(s, zero),
        VerifyEntry::new(s, one, Expectation::ExpectedFail).with_note(format!(
            "the closed form includes the n = 0 term; at m = 0 the two index starts differ by {:.12} \
             (README, Errata)",
            probes[0].from_zero.value - probes[0].from_one.value
        )),
    ]
}

fn stirling(m_max: usize) -> Vec<VerifyEntry> {
    let s = Suite::Stirling;
    let table = StirlingTable::new(m_max);
    let multinomial_max = m_max.min(12);
    let (unweighted, corrected) = verify_stirling_identity(m_max);
    vec![
        holds(
            s,
            IdentityReport::check_exact(
                "S(m,n) by recurrence = multinomial sum over p(m,n)",
                range(0, multinomial_max),
                |m| {
                    let row: Vec<ExactRational> = (0..=m as usize)
                        .map(|n| table.get(m as usize, n).unwrap().into())
                        .collect();
                    let alt: Vec<ExactRational> = (0..=m as usize)
                        .map(|n| stirling2_multinomial(m as usize, n).into())
                        .collect();
                    (Polynomial::new(row), Polynomial::new(alt))
                },
            ),
        ),
        VerifyEntry::new(s, unweighted, Expectation::ExpectedFail).with_note(
            "the term-by-term expansion of a divergent geometric series drops the Abel \
             weight 2^(-k) (README, Errata)",
        ),
        holds(s, corrected),
        holds(
            s,
            IdentityReport::check_exact(
                "Σ_k (-1)^k k! S(2j,k) / 2^k = 0 (j ≥ 1)",
                range(1, m_max / 2),
                |j| {
                    (
                        corrected_identity_rhs(2 * j as usize, &table).unwrap(),
                        ExactRational::zero(),
                    )
                },
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Witness;

    #[test]
    fn parse_suite() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("stirling".parse::<Suite>().unwrap(), Suite::Stirling);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn stirling_suite() {
        let entries = run_suite(Suite::Stirling, &VerifyOptions { max: Some(10) });
        let unweighted = entries
            .iter()
            .find(|e| e.expectation == Expectation::ExpectedFail)
            .unwrap();
        assert_eq!(unweighted.status, Status::ExpectedFail);
        assert_eq!(unweighted.report.first_failure, Some(0));
        assert!(all_passed(&entries));
    }

    #[test]
    fn calculus_suite_documents_missing_constant() {
        let entries = run_suite(Suite::Calculus, &VerifyOptions { max: Some(10) });
        assert!(all_passed(&entries));
        let xfail = entries
            .iter()
            .find(|e| e.status == Status::ExpectedFail)
            .unwrap();
        assert_eq!(xfail.report.first_failure, Some(0));
        assert_eq!(
            xfail.report.lhs,
            Some(Witness::Polynomial(Polynomial::identity()))
        );
        let shifted = Polynomial::new(vec![
            ExactRational::new(-1, 2).unwrap(),
            ExactRational::one(),
        ]);
        assert_eq!(xfail.report.rhs, Some(Witness::Polynomial(shifted)));
    }

    #[test]
    fn recurrence_distribution_lambda() {
        for suite in [Suite::Recurrence, Suite::Distribution, Suite::Lambda] {
            let entries = run_suite(suite, &VerifyOptions { max: Some(6) });
            assert!(all_passed(&entries), "{suite}: {entries:#?}");
        }
        let entries = run_suite(Suite::Recurrence, &VerifyOptions { max: Some(50) });
        assert!(entries.iter().all(|e| e.report.holds));
    }

    #[test]
    fn max_is_capped() {
        let opts = VerifyOptions { max: Some(1000) };
        assert_eq!(opts.bound(Suite::Distribution), 16);
        assert_eq!(VerifyOptions::default().bound(Suite::Calculus), 40);
    }
}
