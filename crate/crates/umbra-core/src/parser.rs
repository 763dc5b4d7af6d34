//! The CLI's polynomial-expression language.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term (('+'|'-') term)* ;
//! term    := factor ('*' factor)* ;
//! factor  := '-' factor | atom ('^' nat)? ;
//! atom    := nat ('/' nat)? | 'x' | 'lambda'
//!          | family '(' nat ('|' 'lambda')? ')' | '(' expr ')' ;
//! family  := 'B' | 'E' | 'AE' | 'F' | 'y' ;
//! nat     := digit+ ;
//! ```
//!
//! `B(n)` is the Bernoulli polynomial, `E(n)` the Euler polynomial,
//! `E(n|lambda)` or `AE(n)` the Apostol-Euler polynomial, `F(n)` the
//! Frobenius-Euler polynomial and `y(n)` the Bessel polynomial. Sums and
//! products are left-associative, `^` binds tighter than `*`, and unary
//! minus binds looser than `^`. There are no floating-point literals:
//! rationals are written `p/q` and stay exact.
//!
//! Parsing is by recursive descent; every error carries a byte offset.

use std::fmt;

use crate::families::{self, FamilyId};
use crate::scalars::{LambdaPolynomial, LambdaRational, Rational};
use crate::umbral::XPolynomial;

/// Abstract syntax of the expression language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Rational(Rational),
    X,
    Lambda,
    /// A family polynomial call such as `B(5)`.
    Family {
        id: FamilyId,
        index: usize,
    },
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, usize),
}

/// A parse failure, anchored to a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Generic syntax error with the tokens that would have been accepted.
    Syntax {
        expected: Vec<&'static str>,
        found: String,
    },
    /// An identifier that is not `x`, `lambda` or a family name.
    UnknownFamily(String),
    /// A negative (or otherwise non-natural) exponent after `^`.
    Exponent,
    /// A rational literal with denominator zero.
    ZeroDenominator,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                write!(
                    f,
                    "syntax error at byte {}: found {}, expected {}",
                    self.offset,
                    found,
                    expected.join(" or ")
                )
            }
            ParseErrorKind::UnknownFamily(name) => {
                write!(f, "unknown family '{}' at byte {}", name, self.offset)
            }
            ParseErrorKind::Exponent => {
                write!(
                    f,
                    "exponent at byte {} must be a nonnegative integer literal",
                    self.offset
                )
            }
            ParseErrorKind::ZeroDenominator => {
                write!(
                    f,
                    "rational literal at byte {} has denominator 0",
                    self.offset
                )
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn found_here(&self) -> String {
        match self.input.get(self.pos) {
            Some(&b) => format!("'{}'", b as char),
            None => "end of input".to_string(),
        }
    }

    fn syntax_error<T>(&mut self, expected: &[&'static str]) -> Result<T, ParseError> {
        self.skip_ws();
        Err(ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Syntax {
                expected: expected.to_vec(),
                found: self.found_here(),
            },
        })
    }

    fn expect(&mut self, byte: u8, token: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax_error(&[token])
        }
    }

    /// A run of digits as a usize; the caller has checked the first digit.
    fn nat(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("digits are ascii");
        text.parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::Syntax {
                expected: vec!["a smaller natural number"],
                found: text.to_string(),
            },
        })
    }

    /// A run of digits as an exact big integer.
    fn nat_bigint(&mut self) -> num_bigint::BigInt {
        self.skip_ws();
        let start = self.pos;
        while self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("digits are ascii");
        text.parse().expect("digit runs parse as integers")
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos]).expect("letters are ascii")
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = PolyExpr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(PolyExpr::Neg(Box::new(inner)));
        }
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            match self.input.get(self.pos) {
                Some(b) if b.is_ascii_digit() => {
                    let exp = self.nat()?;
                    return Ok(PolyExpr::Pow(Box::new(atom), exp));
                }
                _ => {
                    return Err(ParseError {
                        offset: self.pos,
                        kind: ParseErrorKind::Exponent,
                    });
                }
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let num_offset = self.pos;
                let num = self.nat_bigint();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if !self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        return self.syntax_error(&["a natural number"]);
                    }
                    let den_offset = self.pos;
                    let den = self.nat_bigint();
                    let value = Rational::new(num, den).map_err(|_| ParseError {
                        offset: den_offset,
                        kind: ParseErrorKind::ZeroDenominator,
                    })?;
                    let _ = num_offset;
                    Ok(PolyExpr::Rational(value))
                } else {
                    Ok(PolyExpr::Rational(Rational::from_bigint(num)))
                }
            }
            Some(b) if b.is_ascii_alphabetic() => {
                self.skip_ws();
                let ident_offset = self.pos;
                let name = self.ident();
                match name {
                    "x" => Ok(PolyExpr::X),
                    "lambda" => Ok(PolyExpr::Lambda),
                    "B" | "E" | "AE" | "F" | "y" => self.family_call(name, ident_offset),
                    other => Err(ParseError {
                        offset: ident_offset,
                        kind: ParseErrorKind::UnknownFamily(other.to_string()),
                    }),
                }
            }
            _ => self.syntax_error(&[
                "a natural number",
                "'x'",
                "'lambda'",
                "a family call",
                "'('",
            ]),
        }
    }

    fn family_call(&mut self, name: &str, _offset: usize) -> Result<PolyExpr, ParseError> {
        self.expect(b'(', "'('")?;
        self.skip_ws();
        if !self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return self.syntax_error(&["a natural number"]);
        }
        let index = self.nat()?;
        let mut with_lambda = false;
        if self.peek() == Some(b'|') {
            let bar_offset = self.pos;
            self.pos += 1;
            self.skip_ws();
            let marker_offset = self.pos;
            if self.ident() != "lambda" {
                return Err(ParseError {
                    offset: marker_offset,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["'lambda'"],
                        found: "another token".to_string(),
                    },
                });
            }
            // Only the Euler-family names take the parameter marker.
            if name != "E" && name != "AE" {
                return Err(ParseError {
                    offset: bar_offset,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["')'"],
                        found: "'|'".to_string(),
                    },
                });
            }
            with_lambda = true;
        }
        self.expect(b')', "')'")?;
        let id = match name {
            "B" => FamilyId::Bernoulli,
            "E" if with_lambda => FamilyId::ApostolEuler,
            "E" => FamilyId::Euler,
            "AE" => FamilyId::ApostolEuler,
            "F" => FamilyId::FrobeniusEuler,
            "y" => FamilyId::Bessel,
            _ => unreachable!("caller matched the family set"),
        };
        Ok(PolyExpr::Family { id, index })
    }
}

/// Parses an expression; the whole input must be consumed.
pub fn parse(input: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser::new(input);
    let expr = p.expr()?;
    if p.peek().is_some() {
        return p.syntax_error(&["'+'", "'-'", "'*'", "'^'", "end of input"]);
    }
    Ok(expr)
}

/// Lowers an expression to an exact polynomial over Q(lambda). Family calls
/// expand through the `families` module; every grammar-valid expression
/// lowers.
pub fn lower(e: &PolyExpr) -> XPolynomial {
    match e {
        PolyExpr::Rational(r) => XPolynomial::constant(LambdaRational::from_rational(r.clone())),
        PolyExpr::X => XPolynomial::x(),
        PolyExpr::Lambda => XPolynomial::constant(LambdaRational::lambda()),
        PolyExpr::Family { id, index } => match id {
            FamilyId::Monomial => XPolynomial::monomial(*index),
            FamilyId::ApostolEuler => families::apostol_euler_polys(*index).swap_remove(*index),
            FamilyId::Bernoulli => families::bernoulli(*index).1.swap_remove(*index),
            FamilyId::Euler => families::euler(*index).1.swap_remove(*index),
            FamilyId::FrobeniusEuler => families::frobenius_euler(*index).1.swap_remove(*index),
            FamilyId::Bessel => families::bessel_polys(*index).swap_remove(*index),
        },
        PolyExpr::Neg(inner) => -&lower(inner),
        PolyExpr::Add(a, b) => &lower(a) + &lower(b),
        PolyExpr::Sub(a, b) => &lower(a) - &lower(b),
        PolyExpr::Mul(a, b) => &lower(a) * &lower(b),
        PolyExpr::Pow(base, exp) => lower(base).pow(*exp),
    }
}

/// The largest family index or power exponent in the expression; used by
/// callers that bound runtime before lowering.
pub fn max_index(e: &PolyExpr) -> usize {
    match e {
        PolyExpr::Rational(_) | PolyExpr::X | PolyExpr::Lambda => 0,
        PolyExpr::Family { index, .. } => *index,
        PolyExpr::Neg(inner) => max_index(inner),
        PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
            max_index(a).max(max_index(b))
        }
        PolyExpr::Pow(base, exp) => max_index(base).max(*exp),
    }
}

/// Renders a polynomial back into the expression grammar, such that
/// `lower(parse(pretty(p))) == p`. Returns `None` when a coefficient has a
/// nontrivial denominator in lambda, which the grammar cannot spell.
pub fn pretty(p: &XPolynomial) -> Option<String> {
    if p.is_zero() {
        return Some("0".to_string());
    }
    let mut out = String::new();
    for (n, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !c.is_polynomial() {
            return None;
        }
        let poly = c.num();
        let terms: Vec<usize> = (0..poly.coeffs().len())
            .filter(|&k| !poly.coeff(k).is_zero())
            .collect();
        if terms.len() == 1 {
            let k = terms[0];
            let r = poly.coeff(k);
            push_sign(&mut out, r.is_negative());
            push_product(&mut out, &r.abs(), k, n);
        } else {
            // Multi-term lambda coefficient: parenthesized sum times x^n.
            push_sign(&mut out, false);
            out.push('(');
            let mut first = true;
            for &k in terms.iter().rev() {
                let r = poly.coeff(k);
                if first {
                    if r.is_negative() {
                        out.push('-');
                    }
                    first = false;
                } else {
                    out.push_str(if r.is_negative() { " - " } else { " + " });
                }
                push_product(&mut out, &r.abs(), k, 0);
            }
            out.push(')');
            if n > 0 {
                out.push('*');
                push_var(&mut out, "x", n);
            }
        }
    }
    Some(out)
}

fn push_sign(out: &mut String, negative: bool) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
}

/// Appends `r * lambda^k * x^n`, dropping unit factors.
fn push_product(out: &mut String, magnitude: &Rational, lambda_pow: usize, x_pow: usize) {
    let mut wrote = false;
    if !magnitude.is_one() || (lambda_pow == 0 && x_pow == 0) {
        out.push_str(&magnitude.to_string());
        wrote = true;
    }
    if lambda_pow > 0 {
        if wrote {
            out.push('*');
        }
        push_var(out, "lambda", lambda_pow);
        wrote = true;
    }
    if x_pow > 0 {
        if wrote {
            out.push('*');
        }
        push_var(out, "x", x_pow);
    }
}

fn push_var(out: &mut String, name: &str, power: usize) {
    out.push_str(name);
    if power > 1 {
        out.push_str(&format!("^{power}"));
    }
}

/// Convenience: lambda-polynomial constant for tests and callers.
pub fn lambda_poly_const(p: LambdaPolynomial) -> XPolynomial {
    XPolynomial::constant(LambdaRational::from_poly(p))
}
