//! Exact umbral-calculus engine over the rational-function field Q(lambda).
//!
//! The crate builds classical polynomial families (Apostol-Euler, Bernoulli,
//! Euler, Frobenius-Euler, Bessel) from their defining recurrences, realizes
//! the umbral algebra of truncated formal power series acting on polynomials,
//! and expands arbitrary polynomials in the Apostol-Euler basis through the
//! orthogonality functional. Every computation is exact: scalars live in
//! Q(lambda) (reduced fractions of lambda-polynomials with arbitrary-precision
//! rational coefficients) and equality is decidable, so identities are either
//! verified or refuted, never approximated.
//!
//! Module map:
//! - [`scalars`]: Q and Q(lambda) arithmetic, the coefficient domain.
//! - [`series`]: truncated power series in t, stored in divided-power form.
//! - [`umbral`]: polynomials in x and the functional/operator actions on them.
//! - [`sheffer`]: Sheffer sequences from (g, f) pairs and their orthogonality.
//! - [`families`]: the polynomial families and number tables.
//! - [`expansion`]: Apostol-Euler basis expansion and closed-form verification.
//! - [`parser`]: the expression language used by the CLI.
//!
//! With the default `parallel` feature the data-parallel inner loops
//! (orthogonality matrices, per-degree expansion coefficients, batch
//! verification) run on rayon; without it the same code runs sequentially.
//!
//! # Example
//!
//! ```
//! use umbra_core::expansion::{expand, reconstruct};
//! use umbra_core::parser;
//!
//! let p = parser::lower(&parser::parse("x^2 - 1/3").unwrap());
//! let coeffs = expand(&p, 2).unwrap();
//! assert_eq!(reconstruct(&coeffs), p);
//! ```

pub mod error;
mod exec;
pub mod expansion;
pub mod families;
pub mod parser;
pub mod scalars;
pub mod series;
pub mod sheffer;
pub mod umbral;
mod util;

pub use error::{CoreError, Result};
pub use scalars::{LambdaPolynomial, LambdaRational, Rational};
pub use series::{SeriesOrder, TruncatedSeries};
pub use umbral::XPolynomial;
