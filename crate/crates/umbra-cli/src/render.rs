//! Text, JSON and LaTeX rendering of scalars, polynomials and reports.
//!
//! All formats are byte-deterministic: values are canonical, iteration
//! orders are fixed, and JSON objects serialize with sorted keys.

use serde_json::{json, Value};

use umbra_core::expansion::{ExpansionCoeffs, ExpansionReport, Verdict};
use umbra_core::scalars::{LambdaPolynomial, LambdaRational, Rational};
use umbra_core::umbral::XPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(format!("unknown format '{other}' (text, json, latex)")),
        }
    }
}

/// `{"num": [...], "den": [...]}` with rationals as `"p/q"` strings, lambda
/// powers low to high. Arbitrary precision survives the text transport.
pub fn scalar_json(c: &LambdaRational) -> Value {
    let strings = |p: &LambdaPolynomial| -> Vec<Value> {
        p.coeffs()
            .iter()
            .map(|r| Value::String(r.to_string()))
            .collect()
    };
    json!({ "num": strings(c.num()), "den": strings(c.den()) })
}

pub fn rational_latex(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let mag = r.abs();
    if mag.is_integer() {
        format!("{sign}{}", mag.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

pub fn lambda_poly_latex(p: &LambdaPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !(mag.is_one() && k > 0) {
            out.push_str(&rational_latex(&mag));
        }
        if k > 0 {
            out.push_str("\\lambda");
            if k > 1 {
                out.push_str(&format!("^{{{k}}}"));
            }
        }
    }
    out
}

pub fn scalar_latex(c: &LambdaRational) -> String {
    if c.den().is_one() {
        lambda_poly_latex(c.num())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            lambda_poly_latex(c.num()),
            lambda_poly_latex(c.den())
        )
    }
}

pub fn poly_latex(p: &XPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        match c.as_rational() {
            Some(r) => {
                if out.is_empty() {
                    if r.is_negative() {
                        out.push('-');
                    }
                } else {
                    out.push_str(if r.is_negative() { " - " } else { " + " });
                }
                let mag = r.abs();
                if !(mag.is_one() && n > 0) {
                    out.push_str(&rational_latex(&mag));
                }
            }
            None => {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                out.push_str(&format!("\\left({}\\right)", scalar_latex(c)));
            }
        }
        if n > 0 {
            out.push('x');
            if n > 1 {
                out.push_str(&format!("^{{{n}}}"));
            }
        }
    }
    out
}

pub fn coeffs_json(c: &ExpansionCoeffs) -> Value {
    Value::Array(c.coeffs().iter().map(scalar_json).collect())
}

/// Two-column aligned table with a header, used by the text renderers.
pub fn aligned_table(header: (&str, &str), rows: &[(String, String)]) -> String {
    let w = rows
        .iter()
        .map(|(k, _)| k.len())
        .chain([header.0.len()])
        .max()
        .unwrap_or(0);
    let mut out = format!("{:<w$}  {}\n", header.0, header.1, w = w);
    for (k, v) in rows {
        out.push_str(&format!("{k:<w$}  {v}\n", w = w));
    }
    out
}

/// Text rendering of one verification report.
pub fn report_text(report: &ExpansionReport) -> String {
    let mut out = String::new();
    match &report.verdict {
        Verdict::AllMatch => {
            out.push_str(&format!("n={}: all-match\n", report.degree));
        }
        Verdict::MismatchAt(ks) => {
            let list: Vec<String> = ks.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "n={}: MISMATCH at k={{{}}}\n",
                report.degree,
                list.join(",")
            ));
            let has_rederived = report.per_k.iter().any(|c| c.rederived.is_some());
            for cmp in &report.per_k {
                let marker = if cmp.matches { "ok      " } else { "MISMATCH" };
                out.push_str(&format!(
                    "  k={} {} functional: {}\n",
                    cmp.k, marker, cmp.functional
                ));
                out.push_str(&format!(
                    "       {:8} closed-form: {}\n",
                    "", cmp.closed_form
                ));
                if has_rederived {
                    if let Some(corr) = &cmp.rederived {
                        out.push_str(&format!("       {:8} rederived: {}\n", "", corr));
                    }
                }
            }
        }
    }
    out
}

pub fn report_json(report: &ExpansionReport) -> Value {
    let entries: Vec<Value> = report
        .per_k
        .iter()
        .map(|cmp| {
            let mut obj = json!({
                "k": cmp.k,
                "functional": scalar_json(&cmp.functional),
                "closed_form": scalar_json(&cmp.closed_form),
                "match": cmp.matches,
            });
            if let Some(corr) = &cmp.rederived {
                obj.as_object_mut()
                    .expect("object literal")
                    .insert("rederived".to_string(), scalar_json(corr));
            }
            obj
        })
        .collect();
    let (verdict, mismatch_at) = match &report.verdict {
        Verdict::AllMatch => ("all-match", Vec::new()),
        Verdict::MismatchAt(ks) => ("mismatch", ks.iter().copied().collect()),
    };
    json!({
        "family": report.family.as_str(),
        "n": report.degree,
        "verdict": verdict,
        "mismatch_at": mismatch_at,
        "entries": entries,
    })
}

/// Report rendering for LaTeX output: one equation line per coefficient.
pub fn report_latex(report: &ExpansionReport) -> String {
    let mut out = format!("%% family {}, n = {}\n", report.family, report.degree);
    for cmp in &report.per_k {
        out.push_str(&format!(
            "c_{{{}}}^{{\\mathrm{{func}}}} = {}\n",
            cmp.k,
            scalar_latex(&cmp.functional)
        ));
        out.push_str(&format!(
            "c_{{{}}}^{{\\mathrm{{closed}}}} = {}\n",
            cmp.k,
            scalar_latex(&cmp.closed_form)
        ));
        if let Some(corr) = &cmp.rederived {
            out.push_str(&format!(
                "c_{{{}}}^{{\\mathrm{{rederived}}}} = {}\n",
                cmp.k,
                scalar_latex(corr)
            ));
        }
    }
    out
}
