//! Polynomials in x over Q(lambda) and the two actions of a series on them.
//!
//! A series f = sum a_k t^k/k! acts on a polynomial p two ways:
//! as a linear functional, `functional_apply(f, p) = sum p_n a_n` (t^k pairs
//! with x^n as n! delta_{n,k}); and as a differential operator,
//! `operator_apply(f, p) = sum (a_k/k!) p^(k)`, i.e. t acts as d/dx. The two
//! are adjoint: <f*g | p> = <f | g.p>.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalars::{LambdaRational, Rational};
use crate::series::TruncatedSeries;
use crate::util::factorial_scalar;

/// A dense polynomial in x with Q(lambda) coefficients; index n holds the
/// coefficient of x^n, and the top coefficient is nonzero unless the vector
/// is empty (the zero polynomial).
#[derive(Clone, PartialEq, Eq)]
pub struct XPolynomial {
    coeffs: Vec<LambdaRational>,
}

impl XPolynomial {
    pub fn zero() -> Self {
        XPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPolynomial::constant(LambdaRational::one())
    }

    pub fn constant(c: LambdaRational) -> Self {
        if c.is_zero() {
            XPolynomial::zero()
        } else {
            XPolynomial { coeffs: vec![c] }
        }
    }

    /// The monomial x^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![LambdaRational::zero(); n + 1];
        coeffs[n] = LambdaRational::one();
        XPolynomial { coeffs }
    }

    pub fn x() -> Self {
        XPolynomial::monomial(1)
    }

    /// Builds from coefficients (index = power of x), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<LambdaRational>) -> Self {
        while coeffs.last().is_some_and(LambdaRational::is_zero) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LambdaRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> LambdaRational {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(LambdaRational::zero)
    }

    pub fn leading(&self) -> Option<&LambdaRational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a point of Q(lambda); symbolic points are fine.
    pub fn eval(&self, y: &LambdaRational) -> LambdaRational {
        let mut acc = LambdaRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * y) + c;
        }
        acc
    }

    /// First derivative with respect to x.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return XPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale_rational(&Rational::from_int(n as i64)))
            .collect();
        XPolynomial::from_coeffs(coeffs)
    }

    /// k-th derivative with respect to x.
    pub fn derivative_k(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    pub fn scale(&self, c: &LambdaRational) -> Self {
        if c.is_zero() {
            return XPolynomial::zero();
        }
        XPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = XPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Specializes every coefficient at lambda = `at`.
    pub fn eval_lambda(&self, at: &Rational) -> Result<XPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(at).map(LambdaRational::from_rational))
            .collect::<Result<Vec<_>>>()?;
        Ok(XPolynomial::from_coeffs(coeffs))
    }
}

impl Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        XPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        XPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::zero();
        }
        let mut coeffs = vec![LambdaRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for XPolynomial {
    /// Renders high power first with `x` as the variable, e.g.
    /// `x^2 - x + 1/6`; lambda-dependent coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let rendered = match c.as_rational() {
                Some(r) => {
                    let mag = r.abs();
                    if first {
                        if r.is_negative() {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if r.is_negative() {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    if !(mag.is_one() && n > 0) {
                        write!(f, "{mag}")?;
                        n > 0
                    } else {
                        false
                    }
                }
                None => {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let s = c.to_string();
                    if s.contains(' ') && !s.starts_with('(') {
                        write!(f, "({s})")?;
                    } else {
                        write!(f, "{s}")?;
                    }
                    n > 0
                }
            };
            if n > 0 {
                if rendered {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if n > 1 {
                    write!(f, "^{n}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Applies a series as a linear functional: <f | p> = sum p_n a_n.
///
/// The series cap must cover deg p; a shorter series would silently change
/// the value, so it is an error instead.
pub fn functional_apply(f: &TruncatedSeries, p: &XPolynomial) -> Result<LambdaRational> {
    let deg = match p.degree() {
        Some(d) => d,
        None => return Ok(LambdaRational::zero()),
    };
    if f.cap() < deg {
        return Err(CoreError::InsufficientPrecision {
            cap: f.cap(),
            needed: deg,
        });
    }
    let mut acc = LambdaRational::zero();
    for (n, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(c * &f.coeff(n));
    }
    Ok(acc)
}

/// Applies a series as a differential operator: f.p = sum_k (a_k/k!) p^(k),
/// with t acting as d/dx. Adjoint to [`functional_apply`]:
/// <f*g | p> = <f | g.p> exactly.
pub fn operator_apply(f: &TruncatedSeries, p: &XPolynomial) -> Result<XPolynomial> {
    let deg = match p.degree() {
        Some(d) => d,
        None => return Ok(XPolynomial::zero()),
    };
    if f.cap() < deg {
        return Err(CoreError::InsufficientPrecision {
            cap: f.cap(),
            needed: deg,
        });
    }
    let mut acc = XPolynomial::zero();
    let mut deriv = p.clone();
    for k in 0..=deg {
        if deriv.is_zero() {
            break;
        }
        let a = f.coeff(k);
        if !a.is_zero() {
            let scale = a
                .checked_div(&factorial_scalar(k))
                .expect("factorial nonzero");
            acc = &acc + &deriv.scale(&scale);
        }
        deriv = deriv.derivative();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> LambdaRational {
        LambdaRational::from_int(n)
    }

    fn lam() -> LambdaRational {
        LambdaRational::lambda()
    }

    #[test]
    fn functional_examples() {
        // <t^2 | x^2> = 2! = 2
        let t2 = TruncatedSeries::t_power(2, 4);
        let x2 = XPolynomial::monomial(2);
        assert_eq!(functional_apply(&t2, &x2).unwrap(), int(2));
        // <e^{3t} | x^2> = 3^2 = 9
        let e3 = TruncatedSeries::exp(&int(3), 4);
        assert_eq!(functional_apply(&e3, &x2).unwrap(), int(9));
        // <1 + lambda e^t | x> = lambda
        let op = TruncatedSeries::linear_comb(
            &LambdaRational::one(),
            &TruncatedSeries::one(4),
            &lam(),
            &TruncatedSeries::exp(&LambdaRational::one(), 4),
        );
        assert_eq!(functional_apply(&op, &XPolynomial::x()).unwrap(), lam());
        // cap too small is loud
        assert_eq!(
            functional_apply(&TruncatedSeries::one(1), &XPolynomial::monomial(3)),
            Err(CoreError::InsufficientPrecision { cap: 1, needed: 3 })
        );
    }

    #[test]
    fn operator_examples() {
        // t . x^3 = 3x^2
        let t = TruncatedSeries::t(4);
        let x3 = XPolynomial::monomial(3);
        assert_eq!(
            operator_apply(&t, &x3).unwrap(),
            XPolynomial::monomial(2).scale(&int(3))
        );
        // 1 . p = p
        let p = XPolynomial::from_coeffs(vec![LambdaRational::ratio(1, 6), int(-1), int(1)]);
        assert_eq!(operator_apply(&TruncatedSeries::one(4), &p).unwrap(), p);
        // e^t . x^2 = (x+1)^2 = x^2 + 2x + 1
        let e = TruncatedSeries::exp(&LambdaRational::one(), 4);
        let shifted = operator_apply(&e, &XPolynomial::monomial(2)).unwrap();
        assert_eq!(
            shifted,
            XPolynomial::from_coeffs(vec![int(1), int(2), int(1)])
        );
    }

    #[test]
    fn evaluation() {
        // B_2(x) = x^2 - x + 1/6 at 1 gives 1/6
        let b2 = XPolynomial::from_coeffs(vec![LambdaRational::ratio(1, 6), int(-1), int(1)]);
        assert_eq!(b2.eval(&int(1)), LambdaRational::ratio(1, 6));
        assert_eq!(b2.eval(&int(0)), LambdaRational::ratio(1, 6));
        // eval at symbolic lambda
        assert_eq!(XPolynomial::x().eval(&lam()), lam());
        // evaluation agrees with the e^{yt} functional
        let y = LambdaRational::ratio(-3, 7);
        let e_y = TruncatedSeries::exp(&y, 4);
        assert_eq!(functional_apply(&e_y, &b2).unwrap(), b2.eval(&y));
    }

    #[test]
    fn derivatives() {
        let x3 = XPolynomial::monomial(3);
        assert_eq!(x3.derivative_k(2), XPolynomial::x().scale(&int(6)));
        assert_eq!(
            XPolynomial::constant(lam()).derivative(),
            XPolynomial::zero()
        );
        // <t^k | p> = p^(k)(0)
        let p = XPolynomial::from_coeffs(vec![int(2), int(-5), int(0), int(7)]);
        for k in 0..=5 {
            let tk = TruncatedSeries::t_power(k, 5);
            assert_eq!(
                functional_apply(&tk, &p).unwrap(),
                p.derivative_k(k).eval(&int(0))
            );
        }
    }

    #[test]
    fn display_forms() {
        let b2 = XPolynomial::from_coeffs(vec![LambdaRational::ratio(1, 6), int(-1), int(1)]);
        assert_eq!(b2.to_string(), "x^2 - x + 1/6");
        let p = XPolynomial::from_coeffs(vec![int(0), lam()]);
        assert_eq!(p.to_string(), "lambda*x");
        assert_eq!(XPolynomial::zero().to_string(), "0");
    }
}
