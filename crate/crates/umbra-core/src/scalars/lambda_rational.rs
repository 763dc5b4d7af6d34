//! The rational-function field Q(lambda), in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalars::{LambdaPolynomial, Rational};

/// An element of Q(lambda) as a reduced fraction of lambda-polynomials.
///
/// Canonical form: the denominator is nonzero and monic, numerator and
/// denominator are coprime over `Q[lambda]`, and zero is 0/1. Because every
/// value is canonical, equality is the derived field-by-field comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaRational {
    num: LambdaPolynomial,
    den: LambdaPolynomial,
}

impl LambdaRational {
    /// Builds `num/den` and reduces to canonical form. Fails when `den` is
    /// the zero polynomial.
    pub fn new(num: LambdaPolynomial, den: LambdaPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Canonicalizes a fraction whose denominator is known nonzero.
    fn reduced(num: LambdaPolynomial, den: LambdaPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return LambdaRational {
                num: LambdaPolynomial::zero(),
                den: LambdaPolynomial::one(),
            };
        }
        let g = num.gcd(&den).expect("operands are nonzero");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            let (n, nr) = num.div_rem(&g).expect("gcd divides");
            let (d, dr) = den.div_rem(&g).expect("gcd divides");
            debug_assert!(nr.is_zero() && dr.is_zero());
            (n, d)
        };
        let lc = den.leading().expect("denominator nonzero").clone();
        if lc.is_one() {
            LambdaRational { num, den }
        } else {
            let inv = lc.recip().expect("leading coefficient nonzero");
            LambdaRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        LambdaRational {
            num: LambdaPolynomial::zero(),
            den: LambdaPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        LambdaRational {
            num: LambdaPolynomial::one(),
            den: LambdaPolynomial::one(),
        }
    }

    /// The symbol lambda itself.
    pub fn lambda() -> Self {
        LambdaRational {
            num: LambdaPolynomial::lambda(),
            den: LambdaPolynomial::one(),
        }
    }

    pub fn from_poly(p: LambdaPolynomial) -> Self {
        LambdaRational {
            num: p,
            den: LambdaPolynomial::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LambdaPolynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// `p/q` from machine integers. Panics if `q == 0`; intended for literals.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::ratio(p, q))
    }

    pub fn num(&self) -> &LambdaPolynomial {
        &self.num
    }

    pub fn den(&self) -> &LambdaPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a plain lambda-polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is free of lambda altogether.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().is_none_or(|d| d == 0)
    }

    /// The underlying rational when the value is lambda-free.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// Exact quotient; fails when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Specializes lambda to a rational point. Fails with `PoleAtLambda`
    /// when the denominator vanishes there.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let den = self.den.eval(at);
        if den.is_zero() {
            return Err(CoreError::PoleAtLambda { at: at.clone() });
        }
        self.num.eval(at).checked_div(&den)
    }

    pub fn pow(&self, exp: usize) -> Self {
        // Powers of a canonical fraction are canonical; no reduction needed.
        LambdaRational {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LambdaRational::zero();
        }
        LambdaRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add for &LambdaRational {
    type Output = LambdaRational;
    fn add(self, rhs: &LambdaRational) -> LambdaRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return LambdaRational::reduced(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): the only possible common factor of
        // the new numerator and b*d/g divides g, but a full reduction is
        // still cheapest to keep correct; g keeps the operands small.
        let g = self.den.gcd(&rhs.den).expect("denominators nonzero");
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // b, d coprime and both fractions reduced: already canonical
            // (denominators are monic, so is their product).
            debug_assert!(num.gcd(&den).map_or(true, |h| h.is_one()));
            if num.is_zero() {
                return LambdaRational::zero();
            }
            return LambdaRational { num, den };
        }
        let (b1, r1) = self.den.div_rem(&g).expect("gcd divides");
        let (d1, r2) = rhs.den.div_rem(&g).expect("gcd divides");
        debug_assert!(r1.is_zero() && r2.is_zero());
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &self.den * &d1;
        LambdaRational::reduced(num, den)
    }
}

impl Sub for &LambdaRational {
    type Output = LambdaRational;
    fn sub(self, rhs: &LambdaRational) -> LambdaRational {
        self + &(-rhs)
    }
}

impl Mul for &LambdaRational {
    type Output = LambdaRational;
    fn mul(self, rhs: &LambdaRational) -> LambdaRational {
        if self.is_zero() || rhs.is_zero() {
            return LambdaRational::zero();
        }
        // Cross-reduce before multiplying: gcd(a, d) and gcd(c, b) carry all
        // possible cancellation when both operands are reduced.
        let g1 = self.num.gcd(&rhs.den).expect("operands nonzero");
        let g2 = rhs.num.gcd(&self.den).expect("operands nonzero");
        let (a, _) = self.num.div_rem(&g1).expect("gcd divides");
        let (d, _) = rhs.den.div_rem(&g1).expect("gcd divides");
        let (c, _) = rhs.num.div_rem(&g2).expect("gcd divides");
        let (b, _) = self.den.div_rem(&g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            LambdaRational { num, den }
        } else {
            let inv = lc.recip().expect("nonzero");
            LambdaRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Neg for &LambdaRational {
    type Output = LambdaRational;
    fn neg(self) -> LambdaRational {
        LambdaRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for LambdaRational {
    type Output = LambdaRational;
    fn add(self, rhs: LambdaRational) -> LambdaRational {
        &self + &rhs
    }
}

impl Sub for LambdaRational {
    type Output = LambdaRational;
    fn sub(self, rhs: LambdaRational) -> LambdaRational {
        &self - &rhs
    }
}

impl Mul for LambdaRational {
    type Output = LambdaRational;
    fn mul(self, rhs: LambdaRational) -> LambdaRational {
        &self * &rhs
    }
}

impl Neg for LambdaRational {
    type Output = LambdaRational;
    fn neg(self) -> LambdaRational {
        -&self
    }
}

impl From<i64> for LambdaRational {
    fn from(n: i64) -> Self {
        LambdaRational::from_int(n)
    }
}

impl fmt::Display for LambdaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_simple = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        if num_simple {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        let den_simple = self.den.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        if den_simple {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for LambdaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
