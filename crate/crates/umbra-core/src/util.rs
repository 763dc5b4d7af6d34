//! Small exact combinatorial helpers.

use num_bigint::BigInt;
use num_traits::One;

use crate::scalars::{LambdaRational, Rational};

/// n! as a big integer.
pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer; 0 when k > n.
pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

pub(crate) fn factorial_scalar(n: usize) -> LambdaRational {
    LambdaRational::from_rational(Rational::from_bigint(factorial(n)))
}

pub(crate) fn binomial_scalar(n: usize, k: usize) -> LambdaRational {
    LambdaRational::from_rational(Rational::from_bigint(binomial(n, k)))
}
