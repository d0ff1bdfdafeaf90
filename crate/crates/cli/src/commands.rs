use std::f64::consts::PI;
use std::io::Write;

use euler_identities::fourier::{self, Domain};
use euler_identities::stirling::{stirling2, stirling2_multinomial};
use euler_identities::verify::{self, Status, Suite, VerifyEntry, VerifyOptions};
use euler_identities::{euler_numbers, euler_polynomial, format_float as ff, ExactRational};
use serde::Serialize;

use crate::render::{self, opt_float, OutputFormat, Palette};
use crate::{CliError, Command, FourierEvalArgs, StirlingMethod};

/// Largest even exponent for which `lambda` prints the closed form.
const MAX_CLOSED_FORM_EXPONENT: u32 = 200;

pub fn run(command: Command, format: OutputFormat, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Numbers { max } => numbers(max, format, out),
        Command::Poly { m } => poly(m, format, out),
        Command::Eval { m, x } => eval(m, &x, format, out),
        Command::FourierEval(args) => fourier_eval(&args, format, out),
        Command::Lambda { s, tolerance } => lambda(s, tolerance, format, out),
        Command::Stirling { m, n, method } => stirling(m, n, method, format, out),
        Command::Verify { suite, max } => verify(suite, max, format, out),
    }
}

#[derive(Serialize)]
struct NumberRow<'a> {
    n: usize,
    value: &'a ExactRational,
}

fn numbers(max: usize, format: OutputFormat, out: &mut impl Write) -> Result<(), CliError> {
    let table = euler_numbers(max);
    let rows: Vec<NumberRow> = table
        .values()
        .iter()
        .enumerate()
        .map(|(n, value)| NumberRow { n, value })
        .collect();
    match format {
        OutputFormat::Plain => {
            for r in &rows {
                writeln!(out, "E_{} = {}", r.n, r.value)?;
            }
            Ok(())
        }
        OutputFormat::Json => render::json(out, &rows),
        OutputFormat::Csv => render::csv(
            out,
            &["n", "value"],
            &rows
                .iter()
                .map(|r| vec![r.n.to_string(), r.value.to_string()])
                .collect::<Vec<_>>(),
        ),
    }
}

fn poly(m: usize, format: OutputFormat, out: &mut impl Write) -> Result<(), CliError> {
    let table = euler_numbers(m);
    let p = euler_polynomial(m, &table)?;
    match format {
        OutputFormat::Plain => {
            writeln!(out, "E_{m}(x) = {}", p.as_polynomial())?;
            Ok(())
        }
        OutputFormat::Json => render::json(out, p.coeffs()),
        OutputFormat::Csv => render::csv(
            out,
            &["power", "coefficient"],
            &p.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| vec![j.to_string(), c.to_string()])
                .collect::<Vec<_>>(),
        ),
    }
}

#[derive(Serialize)]
struct EvalRow {
    m: usize,
    x: ExactRational,
    value: ExactRational,
}

fn eval(m: usize, x: &str, format: OutputFormat, out: &mut impl Write) -> Result<(), CliError> {
    let x: ExactRational = x.parse()?;
    let table = euler_numbers(m);
    let value = euler_polynomial(m, &table)?.eval(&x);
    let row = EvalRow { m, x, value };
    match format {
        OutputFormat::Plain => {
            writeln!(out, "E_{}({}) = {}", row.m, row.x, row.value)?;
            Ok(())
        }
        OutputFormat::Json => render::json(out, &row),
        OutputFormat::Csv => render::csv(
            out,
            &["m", "x", "value"],
            &[vec![
                m.to_string(),
                row.x.to_string(),
                row.value.to_string(),
            ]],
        ),
    }
}

#[derive(Serialize)]
struct FourierRow {
    m: usize,
    x: f64,
    value: f64,
    error_bound: Option<f64>,
    terms: Option<u64>,
}

fn fourier_eval(
    args: &FourierEvalArgs,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let domain = if args.extend {
        Domain::Antiperiodic
    } else {
        Domain::Principal
    };
    let (m, x) = (args.m, args.x);
    let row = match (args.tolerance, args.terms) {
        (Some(tol), _) => {
            let v = fourier::eval_fourier(m, x, tol, domain)?;
            FourierRow {
                m,
                x,
                value: v.value,
                error_bound: Some(v.error_bound),
                terms: None,
            }
        }
        (None, Some(terms)) if m == 0 => {
            if !args.extend && !(0.0..1.0).contains(&x) {
                return Err(CliError::Usage(format!(
                    "x = {x} is outside [0, 1); pass --extend to evaluate it"
                )));
            }
            // Conditionally convergent: no error bound is available.
            let value = fourier::partial_sum(0, x, terms);
            FourierRow {
                m,
                x,
                value,
                error_bound: None,
                terms: Some(terms),
            }
        }
        (None, Some(terms)) => {
            let v = fourier::eval_fourier_terms(m, x, terms, domain)?;
            FourierRow {
                m,
                x,
                value: v.value,
                error_bound: Some(v.error_bound),
                terms: Some(terms),
            }
        }
        (None, None) => unreachable!("clap requires --tolerance or --terms"),
    };
    match format {
        OutputFormat::Plain => {
            match row.error_bound {
                Some(b) => writeln!(
                    out,
                    "E_{}({}) ≈ {} ± {}",
                    row.m,
                    ff(row.x),
                    ff(row.value),
                    ff(b)
                )?,
                None => writeln!(
                    out,
                    "E_{}({}) ≈ {} (no error bound for m = 0)",
                    row.m,
                    ff(row.x),
                    ff(row.value)
                )?,
            }
            Ok(())
        }
        OutputFormat::Json => render::json(out, &row),
        OutputFormat::Csv => render::csv(
            out,
            &["m", "x", "value", "error_bound", "terms"],
            &[vec![
                row.m.to_string(),
                ff(row.x),
                ff(row.value),
                opt_float(row.error_bound),
                row.terms.map(|t| t.to_string()).unwrap_or_default(),
            ]],
        ),
    }
}

#[derive(Serialize)]
struct LambdaRow {
    s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_coefficient: Option<ExactRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_value: Option<f64>,
    numeric: f64,
    error_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn lambda(
    s: f64,
    tolerance: f64,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let numeric = fourier::lambda_numeric(s, tolerance)?;
    let even = s.fract() == 0.0
        && s >= 2.0
        && s <= MAX_CLOSED_FORM_EXPONENT as f64
        && (s as u32).is_multiple_of(2);
    let closed = if even {
        let exp = s as u32;
        let table = euler_numbers(exp as usize - 1);
        Some(fourier::lambda_closed_form(exp, &table)?)
    } else {
        None
    };
    let closed_value = closed.as_ref().map(|c| c.to_f64() * PI.powi(s as i32));
    let agreement = closed_value.map(|c| {
        let slack = (s + 4.0) * f64::EPSILON * c.abs();
        (numeric.value - c).abs() <= numeric.error_bound + slack
    });
    let row = LambdaRow {
        s,
        closed_form_coefficient: closed,
        closed_form_value: closed_value,
        numeric: numeric.value,
        error_bound: numeric.error_bound,
        agreement,
    };
    match format {
        OutputFormat::Plain => {
            if let (Some(c), Some(v)) = (&row.closed_form_coefficient, row.closed_form_value) {
                writeln!(out, "closed form: ({c}) π^{} = {}", ff(s), ff(v))?;
            }
            writeln!(
                out,
                "numeric:     {} ± {}",
                ff(row.numeric),
                ff(row.error_bound)
            )?;
            if let Some(a) = row.agreement {
                writeln!(out, "agreement:   {}", if a { "yes" } else { "no" })?;
            }
            Ok(())
        }
        OutputFormat::Json => render::json(out, &row),
        OutputFormat::Csv => render::csv(
            out,
            &[
                "s",
                "closed_form_coefficient",
                "closed_form_value",
                "numeric",
                "error_bound",
                "agreement",
            ],
            &[vec![
                ff(row.s),
                row.closed_form_coefficient
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_default(),
                opt_float(row.closed_form_value),
                ff(row.numeric),
                ff(row.error_bound),
                row.agreement.map(|a| a.to_string()).unwrap_or_default(),
            ]],
        ),
    }
}

#[derive(Serialize)]
struct StirlingRow {
    m: usize,
    n: usize,
    method: &'static str,
    value: String,
}

fn stirling(
    m: usize,
    n: usize,
    method: StirlingMethod,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let (value, method) = match method {
        StirlingMethod::Recurrence => (stirling2(m, n), "recurrence"),
        StirlingMethod::Multinomial => (stirling2_multinomial(m, n), "multinomial"),
    };
    let row = StirlingRow {
        m,
        n,
        method,
        value: value.to_string(),
    };
    match format {
        OutputFormat::Plain => {
            writeln!(out, "S({m}, {n}) = {}", row.value)?;
            Ok(())
        }
        OutputFormat::Json => render::json(out, &row),
        OutputFormat::Csv => render::csv(
            out,
            &["m", "n", "method", "value"],
            &[vec![
                m.to_string(),
                n.to_string(),
                method.to_string(),
                row.value.clone(),
            ]],
        ),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    suite: Suite,
    max: Option<usize>,
    all_passed: bool,
    entries: &'a [VerifyEntry],
}

fn verify(
    suite: Suite,
    max: Option<usize>,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let entries = verify::run_suite(suite, &VerifyOptions { max });
    let ok = verify::all_passed(&entries);
    match format {
        OutputFormat::Plain => {
            let palette = Palette::detect();
            for e in &entries {
                let color = match e.status {
                    Status::Pass => "32",
                    Status::Fail => "31",
                    Status::ExpectedFail | Status::UnexpectedPass => "33",
                };
                writeln!(
                    out,
                    "[{}] {:<12} {}",
                    palette.paint(&format!("{:<5}", e.status.label()), color),
                    e.suite.name(),
                    e.report.identity
                )?;
                if let (Some(i), Some(l), Some(r)) =
                    (e.report.first_failure, &e.report.lhs, &e.report.rhs)
                {
                    writeln!(out, "         first failure at {i}: lhs = {l}, rhs = {r}")?;
                }
                if let Some(note) = &e.note {
                    writeln!(out, "         note: {note}")?;
                }
            }
            let failures = entries.iter().filter(|e| e.status.is_failure()).count();
            let xfail = entries
                .iter()
                .filter(|e| e.status == Status::ExpectedFail)
                .count();
            writeln!(
                out,
                "{} checks, {} failed, {} expected failures",
                entries.len(),
                failures,
                xfail
            )?;
        }
        OutputFormat::Json => render::json(
            out,
            &VerifyOutput {
                suite,
                max,
                all_passed: ok,
                entries: &entries,
            },
        )?,
        OutputFormat::Csv => render::csv(
            out,
            &[
                "suite",
                "identity",
                "expectation",
                "status",
                "holds",
                "first_failure",
                "lhs",
                "rhs",
            ],
            &entries
                .iter()
                .map(|e| {
                    vec![
                        e.suite.name().to_string(),
                        e.report.identity.clone(),
                        serde_plain(&e.expectation),
                        serde_plain(&e.status),
                        e.report.holds.to_string(),
                        e.report
                            .first_failure
                            .map(|i| i.to_string())
                            .unwrap_or_default(),
                        e.report
                            .lhs
                            .as_ref()
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                        e.report
                            .rhs
                            .as_ref()
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

/// Unit-variant enum rendered through its serde name.
fn serde_plain<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}
