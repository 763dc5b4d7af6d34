//! Expansion of polynomials in the Apostol-Euler basis, and verification of
//! the classical closed-form expansions against it.
//!
//! The basis coefficients come from the orthogonality functional:
//! c_k = (1/(2 k!)) <(1 + lambda e^t) t^k | p(x)>, so that
//! p(x) = sum c_k E_k(x|lambda). This functional route is the ground truth
//! of every comparison here; the closed forms, implemented exactly as
//! printed in their classical statements, are the objects under test. When
//! a closed form disagrees, the report says so rather than repairing it;
//! for the Bessel family the report also carries the coefficient rederived
//! from first principles, which is where the printed statement drifts.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CoreError, Result};
use crate::exec;
use crate::families::{self, FamilyId};
use crate::scalars::{LambdaRational, Rational};
use crate::series::TruncatedSeries;
use crate::umbral::{functional_apply, XPolynomial};
use crate::util::{binomial_scalar, factorial, factorial_scalar};

/// Whether an expansion runs with symbolic lambda or with the parameter
/// specialized to a rational value (which keeps every scalar in Q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    Symbolic,
    At(Rational),
}

impl LambdaMode {
    /// Specialized mode; the lone excluded point is lambda = -1.
    pub fn at(value: Rational) -> Result<Self> {
        if value == Rational::from_int(-1) {
            return Err(CoreError::PoleAtLambda { at: value });
        }
        Ok(LambdaMode::At(value))
    }

    /// The parameter as a scalar: the symbol lambda, or the constant.
    pub fn scalar(&self) -> LambdaRational {
        match self {
            LambdaMode::Symbolic => LambdaRational::lambda(),
            LambdaMode::At(v) => LambdaRational::from_rational(v.clone()),
        }
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => write!(f, "symbolic"),
            LambdaMode::At(v) => write!(f, "{v}"),
        }
    }
}

/// Coefficients c_0..c_n of an expansion p = sum c_k E_k(x|lambda).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCoeffs {
    mode: LambdaMode,
    coeffs: Vec<LambdaRational>,
}

impl ExpansionCoeffs {
    pub fn new(mode: LambdaMode, coeffs: Vec<LambdaRational>) -> Self {
        ExpansionCoeffs { mode, coeffs }
    }

    pub fn mode(&self) -> &LambdaMode {
        &self.mode
    }

    pub fn coeffs(&self) -> &[LambdaRational] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Expands p in the Apostol-Euler basis of degree n via the orthogonality
/// functional, with symbolic lambda.
pub fn expand(p: &XPolynomial, n: usize) -> Result<ExpansionCoeffs> {
    expand_with(p, n, &LambdaMode::Symbolic)
}

/// Expands p in the Apostol-Euler basis of degree n:
/// c_k = (1/(2 k!)) <(1 + lambda e^t) t^k | p>.
pub fn expand_with(p: &XPolynomial, n: usize, mode: &LambdaMode) -> Result<ExpansionCoeffs> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(CoreError::DegreeOverflow {
                degree: d,
                bound: n,
            });
        }
    }
    let lam = mode.scalar();
    // 1 + lam e^t, truncated at n: a_0 = 1 + lam, a_k = lam.
    let op = TruncatedSeries::linear_comb(
        &LambdaRational::one(),
        &TruncatedSeries::one(n),
        &lam,
        &TruncatedSeries::exp(&LambdaRational::one(), n),
    );
    let half = LambdaRational::ratio(1, 2);
    let coeffs = exec::try_map_range(n + 1, |k| {
        let shifted = op.mul_series(&TruncatedSeries::t_power(k, n));
        let paired = functional_apply(&shifted, p)?;
        Ok(&(&paired * &half) * &factorial_scalar(k).recip().expect("factorial nonzero"))
    })?;
    Ok(ExpansionCoeffs {
        mode: mode.clone(),
        coeffs,
    })
}

/// Rebuilds sum c_k E_k(x|lambda) from expansion coefficients, using the
/// basis that matches the coefficients' lambda mode.
pub fn reconstruct(c: &ExpansionCoeffs) -> XPolynomial {
    if c.coeffs.is_empty() {
        return XPolynomial::zero();
    }
    let lam = c.mode.scalar();
    let basis = families::apostol_euler_polys_with(&lam, c.degree_bound())
        .expect("mode construction excludes lambda = -1");
    let mut acc = XPolynomial::zero();
    for (k, coeff) in c.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        acc = &acc + &basis[k].scale(coeff);
    }
    acc
}

/// The smallest degree for which a family's closed-form expansion is stated.
pub fn closed_form_min_degree(family: FamilyId) -> Result<usize> {
    match family {
        FamilyId::Monomial | FamilyId::Euler => Ok(0),
        FamilyId::Bernoulli => Ok(2),
        FamilyId::FrobeniusEuler | FamilyId::Bessel => Ok(1),
        FamilyId::ApostolEuler => Err(CoreError::UnsupportedFamily {
            family,
            operation: "closed-form expansion",
        }),
    }
}

fn check_range(family: FamilyId, n: usize) -> Result<()> {
    let min = closed_form_min_degree(family)?;
    if n < min {
        return Err(CoreError::RangeError {
            family,
            degree: n,
            min,
        });
    }
    Ok(())
}

/// The closed-form expansion coefficients of the family's degree-n
/// polynomial in the Apostol-Euler basis, exactly as printed in the
/// classical statements, with symbolic lambda.
pub fn closed_form_coeffs(family: FamilyId, n: usize) -> Result<ExpansionCoeffs> {
    closed_form_coeffs_with(family, n, &LambdaMode::Symbolic)
}

/// Closed-form coefficients with a chosen lambda mode.
///
/// - monomial: c_k = (lambda/2) C(n,k), plus 1/2 at k = n.
/// - bernoulli (n >= 2): c_k = ((1+lambda)/2) C(n,k) B_{n-k} for k != n-1,
///   and c_{n-1} = (lambda-1) n / 4.
/// - euler: c_k = ((1+lambda)/2) C(n,k) E_{n-k}.
/// - frobenius-euler (n >= 1): c_n = (1+lambda)/2, and
///   c_k = ((1-lambda^2)/2) C(n,k) F_{n-k}(-lambda) for k < n.
/// - bessel (n >= 1): c_k = (k!/2^{k+1}) C(n,k) C(n+k,k)
///   + lambda sum_{l=k..n} (k!/2^{l+1}) C(l,k) C(n,l) C(n+l,l).
pub fn closed_form_coeffs_with(
    family: FamilyId,
    n: usize,
    mode: &LambdaMode,
) -> Result<ExpansionCoeffs> {
    check_range(family, n)?;
    let lam = mode.scalar();
    let one = LambdaRational::one();
    let half = LambdaRational::ratio(1, 2);
    let one_plus_half = &(&one + &lam) * &half;

    let coeffs: Vec<LambdaRational> = match family {
        FamilyId::Monomial => (0..=n)
            .map(|k| {
                let mut c = &(&lam * &half) * &binomial_scalar(n, k);
                if k == n {
                    c = &c + &half;
                }
                c
            })
            .collect(),
        FamilyId::Bernoulli => {
            let numbers = families::bernoulli(n).0;
            (0..=n)
                .map(|k| {
                    if k + 1 == n {
                        // (lambda - 1) n / 4
                        (&lam - &one).scale_rational(&Rational::ratio(n as i64, 4))
                    } else {
                        &(&one_plus_half * &binomial_scalar(n, k)) * numbers.value(n - k)
                    }
                })
                .collect()
        }
        FamilyId::Euler => {
            let numbers = families::euler(n).0;
            (0..=n)
                .map(|k| &(&one_plus_half * &binomial_scalar(n, k)) * numbers.value(n - k))
                .collect()
        }
        FamilyId::FrobeniusEuler => {
            let numbers = families::frobenius_euler_with(&lam, n)?.0;
            // (1 - lambda^2)/2
            let factor = &(&one - &(&lam * &lam)) * &half;
            (0..=n)
                .map(|k| {
                    if k == n {
                        one_plus_half.clone()
                    } else {
                        &(&factor * &binomial_scalar(n, k)) * numbers.value(n - k)
                    }
                })
                .collect()
        }
        FamilyId::Bessel => (0..=n)
            .map(|k| {
                let head = bessel_plain_term(n, k);
                let mut tail = LambdaRational::zero();
                for l in k..=n {
                    // k!/2^{l+1} C(l,k) C(n,l) C(n+l,l)
                    let num = factorial(k)
                        * crate::util::binomial(l, k)
                        * crate::util::binomial(n, l)
                        * crate::util::binomial(n + l, l);
                    let den = num_bigint::BigInt::from(1) << (l + 1);
                    let term = LambdaRational::from_rational(
                        Rational::new(num, den).expect("denominator nonzero"),
                    );
                    tail = &tail + &term;
                }
                &head + &(&lam * &tail)
            })
            .collect(),
        FamilyId::ApostolEuler => unreachable!("rejected by check_range"),
    };
    Ok(ExpansionCoeffs {
        mode: mode.clone(),
        coeffs,
    })
}

/// The lambda-free part shared by the printed and rederived Bessel
/// expansions: k!/2^{k+1} C(n,k) C(n+k,k).
fn bessel_plain_term(n: usize, k: usize) -> LambdaRational {
    let num = factorial(k) * crate::util::binomial(n, k) * crate::util::binomial(n + k, k);
    let den = num_bigint::BigInt::from(1) << (k + 1);
    LambdaRational::from_rational(Rational::new(num, den).expect("denominator nonzero"))
}

/// The Bessel expansion coefficients rederived step by step from the
/// functional: c_k = k!/2^{k+1} C(n,k) C(n+k,k)
/// + (lambda/2) sum_{l=k..n} (n+l)! / ((n-l)! 2^l k! (l-k)!).
pub fn bessel_rederived_coeffs_with(n: usize, mode: &LambdaMode) -> Result<ExpansionCoeffs> {
    check_range(FamilyId::Bessel, n)?;
    let lam = mode.scalar();
    let coeffs = (0..=n)
        .map(|k| {
            let head = bessel_plain_term(n, k);
            let mut tail = LambdaRational::zero();
            for l in k..=n {
                let num = factorial(n + l);
                let den = factorial(n - l)
                    * factorial(k)
                    * factorial(l - k)
                    * (num_bigint::BigInt::from(1) << (l + 1));
                let term = LambdaRational::from_rational(
                    Rational::new(num, den).expect("denominator nonzero"),
                );
                tail = &tail + &term;
            }
            &head + &(&lam * &tail)
        })
        .collect();
    Ok(ExpansionCoeffs {
        mode: mode.clone(),
        coeffs,
    })
}

/// One coefficient slot of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffComparison {
    pub k: usize,
    /// Value from the orthogonality functional (the ground truth).
    pub functional: LambdaRational,
    /// Value from the closed form as printed.
    pub closed_form: LambdaRational,
    /// Value rederived from the functional computation step by step;
    /// only carried for the Bessel family, where it differs from `closed_form`.
    pub rederived: Option<LambdaRational>,
    /// Whether `closed_form` equals `functional` exactly.
    pub matches: bool,
}

/// Outcome of comparing a closed form against the functional expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    AllMatch,
    MismatchAt(BTreeSet<usize>),
}

impl Verdict {
    pub fn is_all_match(&self) -> bool {
        matches!(self, Verdict::AllMatch)
    }
}

/// Per-degree comparison between a closed form and the functional expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub family: FamilyId,
    pub degree: usize,
    pub per_k: Vec<CoeffComparison>,
    pub verdict: Verdict,
}

/// Verifies a family's closed-form expansion at degree n with symbolic
/// lambda.
pub fn verify_closed_form(family: FamilyId, n: usize) -> Result<ExpansionReport> {
    verify_closed_form_with(family, n, &LambdaMode::Symbolic)
}

/// Verifies a family's closed-form expansion at degree n: expands the
/// family's degree-n polynomial through the functional and compares entry by
/// entry against [`closed_form_coeffs_with`], in canonical Q(lambda) form.
pub fn verify_closed_form_with(
    family: FamilyId,
    n: usize,
    mode: &LambdaMode,
) -> Result<ExpansionReport> {
    let printed = closed_form_coeffs_with(family, n, mode)?;
    let p = family_polynomial_with(family, n, mode)?;
    let functional = expand_with(&p, n, mode)?;
    let rederived = match family {
        FamilyId::Bessel => Some(bessel_rederived_coeffs_with(n, mode)?),
        _ => None,
    };

    let mut mismatches = BTreeSet::new();
    let per_k = (0..=n)
        .map(|k| {
            let t = functional.coeffs[k].clone();
            let pr = printed.coeffs[k].clone();
            let matches = t == pr;
            if !matches {
                mismatches.insert(k);
            }
            CoeffComparison {
                k,
                functional: t,
                closed_form: pr,
                rederived: rederived.as_ref().map(|c| c.coeffs[k].clone()),
                matches,
            }
        })
        .collect();
    let verdict = if mismatches.is_empty() {
        Verdict::AllMatch
    } else {
        Verdict::MismatchAt(mismatches)
    };
    Ok(ExpansionReport {
        family,
        degree: n,
        per_k,
        verdict,
    })
}

/// Verifies a family for every degree in `min..=max`; the per-degree
/// verifications are independent and run in parallel, collected in degree
/// order.
pub fn verify_closed_form_range(
    family: FamilyId,
    min: usize,
    max: usize,
    mode: &LambdaMode,
) -> Result<Vec<ExpansionReport>> {
    if max < min {
        return Ok(Vec::new());
    }
    exec::try_map_range(max - min + 1, |i| {
        verify_closed_form_with(family, min + i, mode)
    })
}

/// The family's degree-n polynomial under the given lambda mode.
pub fn family_polynomial_with(
    family: FamilyId,
    n: usize,
    mode: &LambdaMode,
) -> Result<XPolynomial> {
    let lam = mode.scalar();
    match family {
        FamilyId::Monomial => Ok(XPolynomial::monomial(n)),
        FamilyId::ApostolEuler => Ok(families::apostol_euler_polys_with(&lam, n)?.swap_remove(n)),
        FamilyId::Bernoulli => Ok(families::bernoulli(n).1.swap_remove(n)),
        FamilyId::Euler => Ok(families::euler(n).1.swap_remove(n)),
        FamilyId::FrobeniusEuler => Ok(families::frobenius_euler_with(&lam, n)?.1.swap_remove(n)),
        FamilyId::Bessel => Ok(families::bessel_polys(n).swap_remove(n)),
    }
}
