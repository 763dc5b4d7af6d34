//! Exact arithmetic in Q and in the rational-function field Q(lambda).
//!
//! [`Rational`] is an arbitrary-precision fraction in canonical form
//! (positive denominator, reduced, zero as 0/1). [`LambdaPolynomial`] is a
//! dense polynomial in the parameter lambda over Q. [`LambdaRational`] is a
//! reduced fraction of lambda-polynomials with monic denominator; it is the
//! scalar type of every series and polynomial in the crate. Canonical form
//! makes equality a plain field-by-field comparison.
//!
//! All three types are immutable values with pure operations, safe to share
//! across threads.

mod lambda_poly;
mod lambda_rational;
mod rational;

pub use lambda_poly::LambdaPolynomial;
pub use lambda_rational::LambdaRational;
pub use rational::Rational;
