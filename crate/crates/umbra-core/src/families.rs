//! The classical polynomial families and their number sequences.
//!
//! Number tables come from the umbral boundary recurrences (the primary
//! path); the generating-function route through series inversion is kept as
//! an independent cross-check in the test suites. Polynomial families are
//! binomial convolutions of their number tables with the monomials, which is
//! exactly the Appell form all four lambda-families share.
//!
//! Recurrences, with lam the (possibly symbolic) parameter:
//! - Apostol-Euler: E_0 = 2/(1+lam), (1+lam) E_m = -lam * sum C(m,k) E_k.
//! - Bernoulli: B_0 = 1, (m+1) B_m = -sum_{k<m} C(m+1,k) B_k.
//! - Euler: E_0 = 1, 2 E_m = -sum_{k<m} C(m,k) E_k.
//! - Frobenius-Euler: F_0 = 1, (1+lam) F_m = -sum_{k<m} C(m,k) F_k.
//!
//! Bessel polynomials come from their explicit coefficient formula
//! y_n = sum_k (n+k)!/((n-k)! k!) x^k/2^k and are lambda-free.

use std::fmt;
use std::str::FromStr;

use crate::error::{CoreError, Result};
use crate::exec;
use crate::scalars::{LambdaRational, Rational};
use crate::series::TruncatedSeries;
use crate::sheffer::ShefferPair;
use crate::umbral::XPolynomial;
use crate::util::{binomial_scalar, factorial};

/// Tags the six families the engine knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Monomial,
    ApostolEuler,
    Bernoulli,
    Euler,
    FrobeniusEuler,
    Bessel,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::Monomial,
        FamilyId::ApostolEuler,
        FamilyId::Bernoulli,
        FamilyId::Euler,
        FamilyId::FrobeniusEuler,
        FamilyId::Bessel,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Monomial => "monomial",
            FamilyId::ApostolEuler => "apostol-euler",
            FamilyId::Bernoulli => "bernoulli",
            FamilyId::Euler => "euler",
            FamilyId::FrobeniusEuler => "frobenius-euler",
            FamilyId::Bessel => "bessel",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

/// A family's number sequence, indexed 0..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberTable {
    family: FamilyId,
    values: Vec<LambdaRational>,
}

impl NumberTable {
    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn values(&self) -> &[LambdaRational] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &LambdaRational {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// 1 + lam as a scalar; fails with a pole error when lam is the constant -1.
fn one_plus(lam: &LambdaRational) -> Result<LambdaRational> {
    let v = &LambdaRational::one() + lam;
    if v.is_zero() {
        return Err(CoreError::PoleAtLambda {
            at: Rational::from_int(-1),
        });
    }
    Ok(v)
}

/// Apostol-Euler numbers E_m(lam) for m = 0..=n with a general parameter.
pub fn apostol_euler_numbers_with(lam: &LambdaRational, n: usize) -> Result<NumberTable> {
    let denom = one_plus(lam)?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(LambdaRational::from_int(2).checked_div(&denom)?);
    for m in 1..=n {
        let mut acc = LambdaRational::zero();
        for (k, e_k) in values.iter().enumerate() {
            acc = &acc + &(e_k * &binomial_scalar(m, k));
        }
        let value = (&(-lam) * &acc).checked_div(&denom)?;
        values.push(value);
    }
    Ok(NumberTable {
        family: FamilyId::ApostolEuler,
        values,
    })
}

/// Apostol-Euler numbers with symbolic lambda.
pub fn apostol_euler_numbers(n: usize) -> NumberTable {
    apostol_euler_numbers_with(&LambdaRational::lambda(), n)
        .expect("1 + lambda is nonzero symbolically")
}

/// Binomial convolution of a number table with the monomials: the Appell
/// polynomials P_m(x) = sum_k C(m,k) a_{m-k} x^k, for m = 0..=n.
fn appell_polys(numbers: &NumberTable) -> Vec<XPolynomial> {
    let n = numbers.len() - 1;
    exec::map_range(n + 1, |m| {
        let coeffs = (0..=m)
            .map(|k| numbers.value(m - k) * &binomial_scalar(m, k))
            .collect();
        XPolynomial::from_coeffs(coeffs)
    })
}

/// Apostol-Euler polynomials E_m(x|lam) for m = 0..=n, general parameter.
pub fn apostol_euler_polys_with(lam: &LambdaRational, n: usize) -> Result<Vec<XPolynomial>> {
    Ok(appell_polys(&apostol_euler_numbers_with(lam, n)?))
}

/// Apostol-Euler polynomials with symbolic lambda; E_m(x|lambda) has degree
/// exactly m and leading coefficient 2/(1+lambda).
pub fn apostol_euler_polys(n: usize) -> Vec<XPolynomial> {
    appell_polys(&apostol_euler_numbers(n))
}

/// Bernoulli numbers and polynomials up to degree n.
///
/// ```
/// use umbra_core::scalars::LambdaRational;
///
/// let (numbers, polys) = umbra_core::families::bernoulli(3);
/// assert_eq!(numbers.value(2), &LambdaRational::ratio(1, 6));
/// assert_eq!(polys[2].to_string(), "x^2 - x + 1/6");
/// ```
pub fn bernoulli(n: usize) -> (NumberTable, Vec<XPolynomial>) {
    let mut values = Vec::with_capacity(n + 1);
    values.push(LambdaRational::one());
    for m in 1..=n {
        // Sum C(m+1,k) B_k over k < m vanishes with the B_m term included,
        // so B_m = -(1/(m+1)) * sum_{k<m} C(m+1,k) B_k.
        let mut acc = LambdaRational::zero();
        for (k, b_k) in values.iter().enumerate() {
            acc = &acc + &(b_k * &binomial_scalar(m + 1, k));
        }
        values.push(acc.scale_rational(&Rational::ratio(-1, (m + 1) as i64)));
    }
    let table = NumberTable {
        family: FamilyId::Bernoulli,
        values,
    };
    let polys = appell_polys(&table);
    (table, polys)
}

/// Euler numbers (values of the Euler polynomials at 0) and polynomials.
pub fn euler(n: usize) -> (NumberTable, Vec<XPolynomial>) {
    let mut values = Vec::with_capacity(n + 1);
    values.push(LambdaRational::one());
    for m in 1..=n {
        let mut acc = LambdaRational::zero();
        for (k, e_k) in values.iter().enumerate() {
            acc = &acc + &(e_k * &binomial_scalar(m, k));
        }
        values.push(acc.scale_rational(&Rational::ratio(-1, 2)));
    }
    let table = NumberTable {
        family: FamilyId::Euler,
        values,
    };
    let polys = appell_polys(&table);
    (table, polys)
}

/// Frobenius-Euler numbers F_m(-lam) and polynomials F_m(x|-lam), general
/// parameter.
pub fn frobenius_euler_with(
    lam: &LambdaRational,
    n: usize,
) -> Result<(NumberTable, Vec<XPolynomial>)> {
    let denom = one_plus(lam)?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(LambdaRational::one());
    for m in 1..=n {
        let mut acc = LambdaRational::zero();
        for (k, f_k) in values.iter().enumerate() {
            acc = &acc + &(f_k * &binomial_scalar(m, k));
        }
        values.push((-&acc).checked_div(&denom)?);
    }
    let table = NumberTable {
        family: FamilyId::FrobeniusEuler,
        values,
    };
    let polys = appell_polys(&table);
    Ok((table, polys))
}

/// Frobenius-Euler numbers and polynomials with symbolic lambda.
pub fn frobenius_euler(n: usize) -> (NumberTable, Vec<XPolynomial>) {
    frobenius_euler_with(&LambdaRational::lambda(), n).expect("1 + lambda is nonzero symbolically")
}

/// Bessel polynomials y_m for m = 0..=n, from the explicit coefficients
/// (m+k)!/((m-k)! k! 2^k); every coefficient is a positive lambda-free
/// rational.
pub fn bessel_polys(n: usize) -> Vec<XPolynomial> {
    exec::map_range(n + 1, |m| {
        let coeffs = (0..=m)
            .map(|k| {
                let num = factorial(m + k);
                let den = factorial(m - k) * factorial(k) * (num_bigint::BigInt::from(1) << k);
                LambdaRational::from_rational(Rational::new(num, den).expect("denominator nonzero"))
            })
            .collect();
        XPolynomial::from_coeffs(coeffs)
    })
}

/// The number table for a family, symbolic lambda. Monomial and Bessel have
/// no number sequence.
pub fn number_table(family: FamilyId, n: usize) -> Result<NumberTable> {
    match family {
        FamilyId::ApostolEuler => Ok(apostol_euler_numbers(n)),
        FamilyId::Bernoulli => Ok(bernoulli(n).0),
        FamilyId::Euler => Ok(euler(n).0),
        FamilyId::FrobeniusEuler => Ok(frobenius_euler(n).0),
        FamilyId::Monomial | FamilyId::Bessel => Err(CoreError::UnsupportedFamily {
            family,
            operation: "number table",
        }),
    }
}

/// The family's polynomial sequence up to degree n, symbolic lambda.
pub fn polynomials(family: FamilyId, n: usize) -> Result<Vec<XPolynomial>> {
    match family {
        FamilyId::Monomial => Ok((0..=n).map(XPolynomial::monomial).collect()),
        FamilyId::ApostolEuler => Ok(apostol_euler_polys(n)),
        FamilyId::Bernoulli => Ok(bernoulli(n).1),
        FamilyId::Euler => Ok(euler(n).1),
        FamilyId::FrobeniusEuler => Ok(frobenius_euler(n).1),
        FamilyId::Bessel => Ok(bessel_polys(n)),
    }
}

/// The invertible series g of the family's Sheffer pair (g, t), truncated at
/// `cap`, with a general parameter. These are the exact divided-power
/// coefficient sequences; the Bernoulli prefactor (e^t - 1)/t is constructed
/// by index shift (a_k = 1/(k+1)), never by dividing series.
pub fn pair_g_series_with(
    lam: &LambdaRational,
    family: FamilyId,
    cap: usize,
) -> Result<TruncatedSeries> {
    let one = LambdaRational::one();
    match family {
        FamilyId::Monomial => Ok(TruncatedSeries::one(cap)),
        FamilyId::ApostolEuler => {
            // (1 + lam e^t)/2
            let half = LambdaRational::ratio(1, 2);
            Ok(TruncatedSeries::linear_comb(
                &half,
                &TruncatedSeries::one(cap),
                &(&half * lam),
                &TruncatedSeries::exp(&one, cap),
            ))
        }
        FamilyId::Bernoulli => {
            // (e^t - 1)/t: divided-power a_k = 1/(k+1)
            let coeffs = (0..=cap)
                .map(|k| LambdaRational::ratio(1, (k + 1) as i64))
                .collect();
            Ok(TruncatedSeries::from_divided_coeffs(coeffs))
        }
        FamilyId::Euler => {
            // (e^t + 1)/2
            let half = LambdaRational::ratio(1, 2);
            Ok(TruncatedSeries::linear_comb(
                &half,
                &TruncatedSeries::exp(&one, cap),
                &half,
                &TruncatedSeries::one(cap),
            ))
        }
        FamilyId::FrobeniusEuler => {
            // (e^t + lam)/(1 + lam)
            let scale = one_plus(lam)?.recip()?;
            Ok(TruncatedSeries::linear_comb(
                &scale,
                &TruncatedSeries::exp(&one, cap),
                &(&scale * lam),
                &TruncatedSeries::one(cap),
            ))
        }
        FamilyId::Bessel => Err(CoreError::UnsupportedFamily {
            family,
            operation: "Sheffer pair",
        }),
    }
}

/// The family's Sheffer pair (g, t) with symbolic lambda.
pub fn sheffer_pair(family: FamilyId, cap: usize) -> Result<ShefferPair> {
    sheffer_pair_with(&LambdaRational::lambda(), family, cap)
}

/// The family's Sheffer pair (g, t) with a general parameter.
pub fn sheffer_pair_with(
    lam: &LambdaRational,
    family: FamilyId,
    cap: usize,
) -> Result<ShefferPair> {
    let g = pair_g_series_with(lam, family, cap)?;
    ShefferPair::new(g, TruncatedSeries::t(cap))
}
