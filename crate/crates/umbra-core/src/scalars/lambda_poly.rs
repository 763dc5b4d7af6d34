//! Dense polynomials in the parameter lambda over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalars::Rational;

/// A polynomial in lambda with rational coefficients, stored dense; index k
/// holds the coefficient of lambda^k. The top coefficient is nonzero unless
/// the vector is empty (the zero polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaPolynomial {
    coeffs: Vec<Rational>,
}

impl LambdaPolynomial {
    pub fn zero() -> Self {
        LambdaPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPolynomial::constant(Rational::one())
    }

    /// The polynomial `lambda`.
    pub fn lambda() -> Self {
        LambdaPolynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            LambdaPolynomial::zero()
        } else {
            LambdaPolynomial { coeffs: vec![c] }
        }
    }

    /// Builds from coefficients (index = power of lambda), trimming trailing
    /// zeros to restore canonical form.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        LambdaPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LambdaPolynomial::zero();
        }
        LambdaPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Rescales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => LambdaPolynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = LambdaPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over Q: returns (quotient, remainder) with
    /// deg r < deg d. Fails on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let d_deg = d.degree().ok_or(CoreError::DivisionByZero)?;
        let d_lead = d.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d_deg + 1 {
            return Ok((LambdaPolynomial::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![Rational::zero(); q_len];
        for i in (0..q_len).rev() {
            let top = rem[i + d_deg].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.checked_div(&d_lead)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = &q * dc;
                rem[i + j] = &rem[i + j] - &sub;
            }
            quot[i] = q;
        }
        Ok((
            LambdaPolynomial::from_coeffs(quot),
            LambdaPolynomial::from_coeffs(rem),
        ))
    }

    /// Monic greatest common divisor over `Q[lambda]` by the Euclidean
    /// algorithm. Fails only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(CoreError::UndefinedGcd);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

impl Add for &LambdaPolynomial {
    type Output = LambdaPolynomial;
    fn add(self, rhs: &LambdaPolynomial) -> LambdaPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        LambdaPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &LambdaPolynomial {
    type Output = LambdaPolynomial;
    fn sub(self, rhs: &LambdaPolynomial) -> LambdaPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        LambdaPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &LambdaPolynomial {
    type Output = LambdaPolynomial;
    fn mul(self, rhs: &LambdaPolynomial) -> LambdaPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        LambdaPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &LambdaPolynomial {
    type Output = LambdaPolynomial;
    fn neg(self) -> LambdaPolynomial {
        LambdaPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for LambdaPolynomial {
    /// Renders high power first, e.g. `lambda^2 + 2*lambda + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "lambda")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
