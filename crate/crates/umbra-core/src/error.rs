//! Error types shared across the engine.

use std::fmt;

use crate::families::FamilyId;
use crate::scalars::Rational;

/// Errors produced by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Division by the zero element of Q or Q(lambda).
    DivisionByZero,
    /// gcd of two zero lambda-polynomials is undefined.
    UndefinedGcd,
    /// A denominator vanishes at the requested specialization point.
    PoleAtLambda { at: Rational },
    /// Multiplicative inversion of a series with no constant term.
    NotInvertible,
    /// Compositional inversion of a series whose order is not exactly 1.
    NotADeltaSeries,
    /// Composition f(g) where g has a nonzero constant term.
    CompositionOrder,
    /// A series was truncated below the degree the operation needs.
    InsufficientPrecision { cap: usize, needed: usize },
    /// The polynomial's degree exceeds the requested expansion degree.
    DegreeOverflow { degree: usize, bound: usize },
    /// The degree is outside the range for which the closed form is stated.
    RangeError {
        family: FamilyId,
        degree: usize,
        min: usize,
    },
    /// The family does not support the requested operation.
    UnsupportedFamily {
        family: FamilyId,
        operation: &'static str,
    },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::DivisionByZero => write!(f, "division by zero"),
            CoreError::UndefinedGcd => write!(f, "gcd(0, 0) is undefined"),
            CoreError::PoleAtLambda { at } => {
                write!(f, "denominator vanishes at lambda = {at}")
            }
            CoreError::NotInvertible => {
                write!(f, "series has no constant term and is not invertible")
            }
            CoreError::NotADeltaSeries => {
                write!(f, "series order is not 1; no compositional inverse")
            }
            CoreError::CompositionOrder => {
                write!(f, "inner series of a composition must have order >= 1")
            }
            CoreError::InsufficientPrecision { cap, needed } => {
                write!(f, "series cap {cap} is below the required degree {needed}")
            }
            CoreError::DegreeOverflow { degree, bound } => {
                write!(
                    f,
                    "polynomial degree {degree} exceeds expansion degree {bound}"
                )
            }
            CoreError::RangeError {
                family,
                degree,
                min,
            } => {
                write!(
                    f,
                    "closed form for {family} is stated only for degree >= {min}, got {degree}"
                )
            }
            CoreError::UnsupportedFamily { family, operation } => {
                write!(f, "{family} has no {operation}")
            }
        }
    }
}

impl std::error::Error for CoreError {}

pub type Result<T> = std::result::Result<T, CoreError>;
