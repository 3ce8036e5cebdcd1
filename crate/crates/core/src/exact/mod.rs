//! Exact scalars, truncated power series and graded cycle classes.

mod cycle;
mod series;

pub use cycle::CycleClass;
pub use series::{Coefficient, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // exact at every step: acc is binom(n, i) before the update
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// `base^exp` for an arbitrary-precision base.
pub fn pow(base: &Integer, exp: u64) -> Integer {
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// `(-1)^k` as an integer.
pub fn sign(k: u64) -> Integer {
    if k.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}
