//! Truncated formal power series in t over Q(lambda).
//!
//! A series is stored in divided-power normalization: index k holds the
//! coefficient a_k of t^k/k!, so the represented series is
//! f(t) = sum a_k t^k/k!. In this basis the functional pairing against x^n
//! reads off a_n directly and multiplication is a binomial convolution.
//!
//! Every series carries an explicit truncation cap; arithmetic truncates to
//! the smaller cap of its operands rather than erroring, matching formal
//! truncation semantics. Two series compare equal only at equal caps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalars::LambdaRational;
use crate::util::{binomial_scalar, factorial_scalar};

/// The order of a series: the smallest power of t with nonzero coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    Finite(usize),
    /// The zero series vanishes at every power up to its cap.
    Infinite,
}

impl SeriesOrder {
    pub fn is_zero(self) -> bool {
        self == SeriesOrder::Finite(0)
    }

    pub fn is_one(self) -> bool {
        self == SeriesOrder::Finite(1)
    }
}

/// A formal power series truncated at degree `cap`, divided-power stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LambdaRational>,
}

impl TruncatedSeries {
    /// Builds a series from divided-power coefficients a_0..a_cap.
    /// The vector length fixes the cap; it must be nonempty.
    pub fn from_divided_coeffs(coeffs: Vec<LambdaRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 slot");
        TruncatedSeries { coeffs }
    }

    pub fn zero(cap: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![LambdaRational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(LambdaRational::one(), cap)
    }

    pub fn constant(c: LambdaRational, cap: usize) -> Self {
        let mut coeffs = vec![LambdaRational::zero(); cap + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// The identity series t (divided-power coefficient 1 at index 1).
    pub fn t(cap: usize) -> Self {
        Self::t_power(1, cap)
    }

    /// t^k as a truncated series: divided-power coefficient k! at index k,
    /// or the zero series when k exceeds the cap.
    pub fn t_power(k: usize, cap: usize) -> Self {
        let mut coeffs = vec![LambdaRational::zero(); cap + 1];
        if k <= cap {
            coeffs[k] = factorial_scalar(k);
        }
        TruncatedSeries { coeffs }
    }

    /// e^{ct}: divided-power coefficients c^k.
    ///
    /// ```
    /// use umbra_core::{LambdaRational, TruncatedSeries};
    ///
    /// let e = TruncatedSeries::exp(&LambdaRational::one(), 8);
    /// // e^t * e^{-t} = 1, exactly, up to the cap
    /// let e_neg = e.invert().unwrap();
    /// assert_eq!(e.mul_series(&e_neg), TruncatedSeries::one(8));
    /// assert_eq!(e_neg, TruncatedSeries::exp(&LambdaRational::from_int(-1), 8));
    /// ```
    pub fn exp(c: &LambdaRational, cap: usize) -> Self {
        let mut coeffs = Vec::with_capacity(cap + 1);
        let mut acc = LambdaRational::one();
        coeffs.push(acc.clone());
        for _ in 1..=cap {
            acc = &acc * c;
            coeffs.push(acc.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Divided-power coefficient of t^k/k!; zero beyond the cap.
    pub fn coeff(&self, k: usize) -> LambdaRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(LambdaRational::zero)
    }

    pub fn coeffs(&self) -> &[LambdaRational] {
        &self.coeffs
    }

    /// Ordinary coefficients a_k/k! of t^k.
    pub fn ordinary_coeffs(&self) -> Vec<LambdaRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                a.checked_div(&factorial_scalar(k))
                    .expect("factorial is nonzero")
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LambdaRational::is_zero)
    }

    /// Smallest k with a_k != 0, or `Infinite` for the zero series.
    pub fn order(&self) -> SeriesOrder {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => SeriesOrder::Finite(k),
            None => SeriesOrder::Infinite,
        }
    }

    pub fn truncate(&self, cap: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(cap + 1).cloned().collect();
        coeffs.resize(cap + 1, LambdaRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &LambdaRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// c*f + d*g, truncated to the common cap.
    pub fn linear_comb(
        c: &LambdaRational,
        f: &TruncatedSeries,
        d: &LambdaRational,
        g: &TruncatedSeries,
    ) -> Self {
        let cap = f.cap().min(g.cap());
        let coeffs = (0..=cap)
            .map(|k| &(c * &f.coeffs[k]) + &(d * &g.coeffs[k]))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Product of series: binomial convolution of divided-power coefficients,
    /// result_n = sum_k C(n,k) a_k b_{n-k}, truncated to the common cap.
    pub fn mul_series(&self, rhs: &TruncatedSeries) -> Self {
        let cap = self.cap().min(rhs.cap());
        let mut coeffs = vec![LambdaRational::zero(); cap + 1];
        for (k, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(cap + 1 - k) {
                if b.is_zero() {
                    continue;
                }
                let n = k + j;
                let term = &(a * b) * &binomial_scalar(n, k);
                coeffs[n] = &coeffs[n] + &term;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse up to the cap. Requires order 0.
    pub fn invert(&self) -> Result<Self> {
        if !self.order().is_zero() {
            return Err(CoreError::NotInvertible);
        }
        let cap = self.cap();
        let a0_inv = self.coeffs[0].recip()?;
        let mut inv = vec![LambdaRational::zero(); cap + 1];
        inv[0] = a0_inv.clone();
        // Solve sum_k C(n,k) a_k b_{n-k} = 0 for b_n, degree by degree.
        for n in 1..=cap {
            let mut acc = LambdaRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = &(&self.coeffs[k] * &inv[n - k]) * &binomial_scalar(n, k);
                acc = &acc + &term;
            }
            inv[n] = &(-&acc) * &a0_inv;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Composition f(g(t)) up to the common cap. Requires order(g) >= 1 so
    /// that only finitely many powers of g contribute per degree.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if inner.order().is_zero() {
            return Err(CoreError::CompositionOrder);
        }
        let cap = self.cap().min(inner.cap());
        let inner = inner.truncate(cap);
        // f(g) = sum_k (a_k/k!) g^k; order(g^k) >= k bounds the sum at cap.
        let mut acc = TruncatedSeries::constant(self.coeffs[0].clone(), cap);
        let mut g_pow = TruncatedSeries::one(cap);
        for k in 1..=cap {
            g_pow = g_pow.mul_series(&inner);
            if g_pow.is_zero() {
                break;
            }
            let scale = self
                .coeff(k)
                .checked_div(&factorial_scalar(k))
                .expect("factorial nonzero");
            if scale.is_zero() {
                continue;
            }
            acc = &acc + &g_pow.scale(&scale);
        }
        Ok(acc)
    }

    /// Compositional inverse: the unique delta series h with h(f(t)) = t up
    /// to the cap. Requires order exactly 1.
    pub fn comp_inverse(&self) -> Result<Self> {
        if !self.order().is_one() {
            return Err(CoreError::NotADeltaSeries);
        }
        let cap = self.cap();
        // Write h(u) = sum_j c_j u^j/j!. Then h(f(t)) = sum_j (c_j/j!) f^j,
        // and matching divided-power coefficients of t^n gives a triangular
        // system: the t^n coefficient of f^n is n! a_1^n != 0.
        let mut powers = Vec::with_capacity(cap + 1);
        powers.push(TruncatedSeries::one(cap));
        for j in 1..=cap {
            let next = powers[j - 1].mul_series(self);
            powers.push(next);
        }
        let mut c = vec![LambdaRational::zero(); cap + 1];
        for n in 1..=cap {
            let mut acc = LambdaRational::zero();
            for j in 1..n {
                if c[j].is_zero() {
                    continue;
                }
                let contrib = c[j]
                    .checked_div(&factorial_scalar(j))
                    .expect("factorial nonzero");
                acc = &acc + &(&contrib * &powers[j].coeff(n));
            }
            let target = if n == 1 {
                LambdaRational::one()
            } else {
                LambdaRational::zero()
            };
            let pivot = powers[n]
                .coeff(n)
                .checked_div(&factorial_scalar(n))
                .expect("factorial nonzero");
            // pivot = a_1^n, nonzero for a delta series
            c[n] = (&target - &acc).checked_div(&pivot)?;
        }
        Ok(TruncatedSeries { coeffs: c })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::linear_comb(&LambdaRational::one(), self, &LambdaRational::one(), rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::linear_comb(
            &LambdaRational::one(),
            self,
            &LambdaRational::from_int(-1),
            rhs,
        )
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&LambdaRational::from_int(-1))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] (divided powers, cap {})", self.cap())
    }
}
