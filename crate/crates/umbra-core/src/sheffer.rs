//! Sheffer sequences from (g, f) pairs and the defining orthogonality.
//!
//! For an invertible g (order 0) and a delta series f (order 1) the Sheffer
//! sequence S_0, S_1, ... is the unique polynomial sequence with
//! <g f^k | S_n> = n! delta_{n,k}. It is generated by
//! (1/g(fbar)) e^{y fbar} where fbar is the compositional inverse of f, so
//! the x^j coefficient of S_k is the divided-power t^k coefficient of
//! M(t) fbar(t)^j / j!, with M = 1/g(fbar).

use crate::error::{CoreError, Result};
use crate::exec;
use crate::scalars::LambdaRational;
use crate::series::TruncatedSeries;
use crate::umbral::{functional_apply, XPolynomial};
use crate::util::factorial_scalar;

/// A pair (g, f) with order(g) = 0 and order(f) = 1, validated on
/// construction.
#[derive(Clone, Debug)]
pub struct ShefferPair {
    g: TruncatedSeries,
    f: TruncatedSeries,
}

impl ShefferPair {
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Result<Self> {
        if !g.order().is_zero() {
            return Err(CoreError::NotInvertible);
        }
        if !f.order().is_one() {
            return Err(CoreError::NotADeltaSeries);
        }
        Ok(ShefferPair { g, f })
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    fn require_cap(&self, n: usize) -> Result<()> {
        let cap = self.g.cap().min(self.f.cap());
        if cap < n {
            return Err(CoreError::InsufficientPrecision { cap, needed: n });
        }
        Ok(())
    }
}

/// The Sheffer polynomials S_0..S_n for the pair. S_k has degree exactly k
/// and leading coefficient 1/(g(0) f'(0)^k).
pub fn sheffer_sequence(pair: &ShefferPair, n: usize) -> Result<Vec<XPolynomial>> {
    pair.require_cap(n)?;
    let fbar = pair.f.comp_inverse()?;
    let m = pair.g.compose(&fbar)?.invert()?;

    // products[j] = M * fbar^j; fbar^j is built incrementally, the products
    // in parallel afterwards.
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(TruncatedSeries::one(m.cap()));
    for j in 1..=n {
        let next = powers[j - 1].mul_series(&fbar);
        powers.push(next);
    }
    let products = exec::map_range(n + 1, |j| m.mul_series(&powers[j]));

    Ok(exec::map_range(n + 1, |k| {
        let coeffs = (0..=k)
            .map(|j| {
                products[j]
                    .coeff(k)
                    .checked_div(&factorial_scalar(j))
                    .expect("factorial nonzero")
            })
            .collect();
        XPolynomial::from_coeffs(coeffs)
    }))
}

/// The matrix of pairings entry (k, n) = <g f^k | S_n> for the given
/// polynomials. A correct Sheffer sequence yields diag(0!, 1!, ..., n!).
pub fn orthogonality_matrix(
    pair: &ShefferPair,
    seq: &[XPolynomial],
) -> Result<Vec<Vec<LambdaRational>>> {
    let max_deg = seq
        .iter()
        .filter_map(XPolynomial::degree)
        .max()
        .unwrap_or(0);
    pair.require_cap(max_deg)?;

    let rows = seq.len();
    let mut functionals = Vec::with_capacity(rows);
    let mut g_fk = pair.g.clone();
    functionals.push(g_fk.clone());
    for _ in 1..rows {
        g_fk = g_fk.mul_series(&pair.f);
        functionals.push(g_fk.clone());
    }

    exec::try_map_range(rows, |k| {
        seq.iter()
            .map(|s_n| functional_apply(&functionals[k], s_n))
            .collect::<Result<Vec<_>>>()
    })
}
