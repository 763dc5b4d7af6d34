//! `umbra` — exact expansion of polynomials in the Apostol-Euler basis.
//!
//! Subcommands: `expand` (expression -> basis coefficients), `verify`
//! (closed-form expansions against the functional computation), `numbers`
//! (family number tables), `basis` (the Apostol-Euler polynomials) and
//! `sheffer` (the Sheffer sequence of a family's pair).
//!
//! Exit codes are a contract: 0 success or all-match, 1 a verified mismatch,
//! 2 expression or usage parse error, 3 range/degree error, 4 pole at the
//! requested lambda. `UMBRA_MAX_DEGREE` (default 64) bounds every degree to
//! keep runtime finite. Identical invocations produce identical bytes.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::OutputFormat;
use serde_json::json;
use umbra_core::error::CoreError;
use umbra_core::expansion::{self, expand_with, reconstruct, LambdaMode};
use umbra_core::families::{self, FamilyId};
use umbra_core::parser;
use umbra_core::scalars::Rational;
use umbra_core::sheffer;
use umbra_core::umbral::XPolynomial;

const DEFAULT_MAX_DEGREE: usize = 64;

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_RANGE: u8 = 3;
const EXIT_POLE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "umbra",
    version,
    about = "Exact umbral-calculus engine over Q(lambda)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Expansion/table degree n (bounded by UMBRA_MAX_DEGREE).
    #[arg(long)]
    degree: usize,
    /// `symbolic` or a rational value `p/q` (lambda = -1 is a pole).
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: String,
    /// Output format: text, json or latex.
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a polynomial expression in the Apostol-Euler basis.
    Expand {
        /// Polynomial expression, e.g. "x^2 + 3/4*x" or "B(4) - y(2)".
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify a family's closed-form expansion against the functional one.
    Verify {
        /// monomial, bernoulli, euler, frobenius-euler or bessel.
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print a family's number table.
    Numbers {
        /// apostol-euler, bernoulli, euler or frobenius-euler.
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the Apostol-Euler basis polynomials E_0..E_n.
    Basis {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the Sheffer sequence S_0..S_n of a family's pair.
    Sheffer {
        /// monomial, apostol-euler, bernoulli, euler or frobenius-euler.
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// A failure carrying the contractual exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn from_core(err: CoreError) -> Self {
        let code = match err {
            CoreError::PoleAtLambda { .. } => EXIT_POLE,
            CoreError::DegreeOverflow { .. }
            | CoreError::RangeError { .. }
            | CoreError::InsufficientPrecision { .. } => EXIT_RANGE,
            CoreError::UnsupportedFamily { .. } => EXIT_PARSE,
            _ => EXIT_RANGE,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let max_degree = max_degree()?;
    match cli.command {
        Command::Expand { poly, common } => cmd_expand(&poly, &common, max_degree),
        Command::Verify { family, common } => cmd_verify(family, &common, max_degree),
        Command::Numbers { family, common } => cmd_numbers(family, &common, max_degree),
        Command::Basis { common } => cmd_basis(&common, max_degree),
        Command::Sheffer { family, common } => cmd_sheffer(family, &common, max_degree),
    }
}

fn max_degree() -> Result<usize, Failure> {
    match std::env::var("UMBRA_MAX_DEGREE") {
        Ok(s) => s.parse().map_err(|_| {
            Failure::new(
                EXIT_PARSE,
                format!("UMBRA_MAX_DEGREE must be a nonnegative integer, got '{s}'"),
            )
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn check_degree(n: usize, max_degree: usize) -> Result<(), Failure> {
    if n > max_degree {
        return Err(Failure::new(
            EXIT_RANGE,
            format!("degree {n} exceeds UMBRA_MAX_DEGREE = {max_degree}"),
        ));
    }
    Ok(())
}

fn parse_lambda(s: &str) -> Result<LambdaMode, Failure> {
    if s == "symbolic" {
        return Ok(LambdaMode::Symbolic);
    }
    let value: Rational = s.parse().map_err(|_| {
        Failure::new(
            EXIT_PARSE,
            format!("--lambda must be 'symbolic' or a rational p/q, got '{s}'"),
        )
    })?;
    LambdaMode::at(value).map_err(Failure::from_core)
}

fn check_family(family: FamilyId, allowed: &[FamilyId], what: &str) -> Result<(), Failure> {
    if allowed.contains(&family) {
        Ok(())
    } else {
        let names: Vec<&str> = allowed.iter().map(|f| f.as_str()).collect();
        Err(Failure::new(
            EXIT_PARSE,
            format!("{what} supports: {}", names.join(", ")),
        ))
    }
}

fn emit(common: &CommonOpts, rendered: String) -> Result<(), Failure> {
    let rendered = if rendered.ends_with('\n') {
        rendered
    } else {
        rendered + "\n"
    };
    match &common.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write stdout: {e}")))
        }
    }
}

fn cmd_expand(poly: &str, common: &CommonOpts, max_degree: usize) -> Result<u8, Failure> {
    check_degree(common.degree, max_degree)?;
    let mode = parse_lambda(&common.lambda)?;
    let expr = parser::parse(poly)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot parse --poly: {e}")))?;
    if parser::max_index(&expr) > max_degree {
        return Err(Failure::new(
            EXIT_RANGE,
            format!("expression index exceeds UMBRA_MAX_DEGREE = {max_degree}"),
        ));
    }
    let symbolic = parser::lower(&expr);
    let p = match &mode {
        LambdaMode::Symbolic => symbolic,
        LambdaMode::At(v) => symbolic.eval_lambda(v).map_err(Failure::from_core)?,
    };
    let coeffs = expand_with(&p, common.degree, &mode).map_err(Failure::from_core)?;
    let check = reconstruct(&coeffs) == p;

    let rendered = match common.format {
        OutputFormat::Text => {
            let rows: Vec<(String, String)> = coeffs
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k.to_string(), c.to_string()))
                .collect();
            let mut out = format!(
                "expand degree={} lambda={}\np(x) = {}\n",
                common.degree, mode, p
            );
            out.push_str(&render::aligned_table(("k", "c_k"), &rows));
            out.push_str(&format!(
                "reconstruction: {}\n",
                if check { "ok" } else { "FAILED" }
            ));
            out
        }
        OutputFormat::Json => {
            let value = json!({
                "command": "expand",
                "degree": common.degree,
                "lambda": mode.to_string(),
                "poly": p.to_string(),
                "coefficients": render::coeffs_json(&coeffs),
                "reconstruction_ok": check,
            });
            serde_json::to_string_pretty(&value).expect("serializable")
        }
        OutputFormat::Latex => {
            let mut out = format!(
                "p(x) = \\sum_{{k=0}}^{{{}}} c_k E_k(x|\\lambda)\n",
                common.degree
            );
            for (k, c) in coeffs.coeffs().iter().enumerate() {
                out.push_str(&format!("c_{{{k}}} = {}\n", render::scalar_latex(c)));
            }
            out
        }
    };
    emit(common, rendered)?;
    Ok(0)
}

fn cmd_verify(family: FamilyId, common: &CommonOpts, max_degree: usize) -> Result<u8, Failure> {
    check_family(
        family,
        &[
            FamilyId::Monomial,
            FamilyId::Bernoulli,
            FamilyId::Euler,
            FamilyId::FrobeniusEuler,
            FamilyId::Bessel,
        ],
        "verify --family",
    )?;
    check_degree(common.degree, max_degree)?;
    let mode = parse_lambda(&common.lambda)?;
    let min = expansion::closed_form_min_degree(family).map_err(Failure::from_core)?;
    if common.degree < min {
        return Err(Failure::from_core(CoreError::RangeError {
            family,
            degree: common.degree,
            min,
        }));
    }

    let reports = expansion::verify_closed_form_range(family, min, common.degree, &mode)
        .map_err(Failure::from_core)?;
    let all_match = reports.iter().all(|r| r.verdict.is_all_match());

    let rendered = match common.format {
        OutputFormat::Text => {
            let mut out = format!(
                "verify family={} lambda={} degrees {}..{}\n",
                family, mode, min, common.degree
            );
            for report in &reports {
                out.push_str(&render::report_text(report));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if all_match { "all-match" } else { "MISMATCH" }
            ));
            out
        }
        OutputFormat::Json => {
            let value = json!({
                "command": "verify",
                "family": family.as_str(),
                "lambda": mode.to_string(),
                "degree": common.degree,
                "reports": reports.iter().map(render::report_json).collect::<Vec<_>>(),
                "all_match": all_match,
            });
            serde_json::to_string_pretty(&value).expect("serializable")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&render::report_latex(report));
            }
            out
        }
    };
    emit(common, rendered)?;
    Ok(if all_match { 0 } else { EXIT_MISMATCH })
}

fn cmd_numbers(family: FamilyId, common: &CommonOpts, max_degree: usize) -> Result<u8, Failure> {
    check_family(
        family,
        &[
            FamilyId::ApostolEuler,
            FamilyId::Bernoulli,
            FamilyId::Euler,
            FamilyId::FrobeniusEuler,
        ],
        "numbers --family",
    )?;
    check_degree(common.degree, max_degree)?;
    let mode = parse_lambda(&common.lambda)?;
    let lam = mode.scalar();
    let table = match family {
        FamilyId::ApostolEuler => {
            families::apostol_euler_numbers_with(&lam, common.degree).map_err(Failure::from_core)?
        }
        FamilyId::Bernoulli => families::bernoulli(common.degree).0,
        FamilyId::Euler => families::euler(common.degree).0,
        FamilyId::FrobeniusEuler => {
            families::frobenius_euler_with(&lam, common.degree)
                .map_err(Failure::from_core)?
                .0
        }
        _ => unreachable!("validated above"),
    };

    let rendered = match common.format {
        OutputFormat::Text => {
            let rows: Vec<(String, String)> = table
                .values()
                .iter()
                .enumerate()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            let mut out = format!(
                "{} numbers, degrees 0..{}, lambda={}\n",
                family, common.degree, mode
            );
            out.push_str(&render::aligned_table(("n", "value"), &rows));
            out
        }
        OutputFormat::Json => {
            let value = json!({
                "command": "numbers",
                "family": family.as_str(),
                "lambda": mode.to_string(),
                "degree": common.degree,
                "values": table.values().iter().map(render::scalar_json).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value).expect("serializable")
        }
        OutputFormat::Latex => {
            let name = match family {
                FamilyId::ApostolEuler => "E_{%N%}(\\lambda)",
                FamilyId::Bernoulli => "B_{%N%}",
                FamilyId::Euler => "E_{%N%}",
                FamilyId::FrobeniusEuler => "F_{%N%}(-\\lambda)",
                _ => unreachable!(),
            };
            let mut out = String::new();
            for (n, v) in table.values().iter().enumerate() {
                let lhs = name.replace("%N%", &n.to_string());
                out.push_str(&format!("{lhs} = {}\n", render::scalar_latex(v)));
            }
            out
        }
    };
    emit(common, rendered)?;
    Ok(0)
}

fn polynomial_table(
    title: String,
    label: &str,
    polys: &[XPolynomial],
    common: &CommonOpts,
    mode: &LambdaMode,
    command: &str,
    family: Option<FamilyId>,
) -> Result<(), Failure> {
    let rendered = match common.format {
        OutputFormat::Text => {
            let rows: Vec<(String, String)> = polys
                .iter()
                .enumerate()
                .map(|(k, p)| (k.to_string(), p.to_string()))
                .collect();
            let mut out = title;
            out.push_str(&render::aligned_table(("k", label), &rows));
            out
        }
        OutputFormat::Json => {
            let polys_json: Vec<_> = polys
                .iter()
                .map(|p| {
                    p.coeffs()
                        .iter()
                        .map(render::scalar_json)
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut value = json!({
                "command": command,
                "lambda": mode.to_string(),
                "degree": common.degree,
                "polynomials": polys_json,
            });
            if let Some(f) = family {
                value
                    .as_object_mut()
                    .expect("object literal")
                    .insert("family".to_string(), json!(f.as_str()));
            }
            serde_json::to_string_pretty(&value).expect("serializable")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for (k, p) in polys.iter().enumerate() {
                let lhs = label.replace('k', &k.to_string());
                out.push_str(&format!("{lhs} = {}\n", render::poly_latex(p)));
            }
            out
        }
    };
    emit(common, rendered)
}

fn cmd_basis(common: &CommonOpts, max_degree: usize) -> Result<u8, Failure> {
    check_degree(common.degree, max_degree)?;
    let mode = parse_lambda(&common.lambda)?;
    let lam = mode.scalar();
    let polys =
        families::apostol_euler_polys_with(&lam, common.degree).map_err(Failure::from_core)?;
    polynomial_table(
        format!(
            "Apostol-Euler basis, degrees 0..{}, lambda={}\n",
            common.degree, mode
        ),
        "E_k(x|lambda)",
        &polys,
        common,
        &mode,
        "basis",
        None,
    )?;
    Ok(0)
}

fn cmd_sheffer(family: FamilyId, common: &CommonOpts, max_degree: usize) -> Result<u8, Failure> {
    check_family(
        family,
        &[
            FamilyId::Monomial,
            FamilyId::ApostolEuler,
            FamilyId::Bernoulli,
            FamilyId::Euler,
            FamilyId::FrobeniusEuler,
        ],
        "sheffer --family",
    )?;
    check_degree(common.degree, max_degree)?;
    let mode = parse_lambda(&common.lambda)?;
    let lam = mode.scalar();
    let pair =
        families::sheffer_pair_with(&lam, family, common.degree).map_err(Failure::from_core)?;
    let seq = sheffer::sheffer_sequence(&pair, common.degree).map_err(Failure::from_core)?;
    polynomial_table(
        format!(
            "Sheffer sequence for the {} pair, degrees 0..{}, lambda={}\n",
            family, common.degree, mode
        ),
        "S_k",
        &seq,
        common,
        &mode,
        "sheffer",
        Some(family),
    )?;
    Ok(0)
}
