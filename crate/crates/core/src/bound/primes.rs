//! Deterministic primality for integers below `ψ_13 ≈ 3.3·10^24`.
//!
//! Miller–Rabin with the first thirteen primes as witnesses has no strong
//! pseudoprime below `ψ_13 = 3317044064679887385961981` (Sorenson–Webster).
//! Anything larger is refused rather than answered probabilistically.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Integer;

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Exclusive upper limit of the deterministic witness set.
pub fn deterministic_limit() -> Integer {
    "3317044064679887385961981".parse().expect("literal")
}

/// Exact primality test. Errors for `n >= ψ_13`.
pub fn is_prime(n: &Integer) -> Result<bool> {
    if *n >= deterministic_limit() {
        return Err(Error::PrimeCapacity(n.clone()));
    }
    if *n < Integer::from(2) {
        return Ok(false);
    }
    for &w in &WITNESSES {
        let w = Integer::from(w);
        if *n == w {
            return Ok(true);
        }
        if n.is_multiple_of(&w) {
            return Ok(false);
        }
    }

    let one = Integer::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }

    'witness: for &w in &WITNESSES {
        let mut x = Integer::from(w).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime(x: &Integer) -> Result<Integer> {
    if *x < Integer::zero() {
        return Err(Error::invalid("next_prime requires x >= 0"));
    }
    let two = Integer::from(2);
    if *x < two {
        return Ok(two);
    }
    let mut candidate = x + 1u32;
    if candidate.is_even() {
        candidate += 1u32;
    }
    while !is_prime(&candidate)? {
        candidate += 2u32;
    }
    Ok(candidate)
}

/// All primes in `[from, to]`, ascending.
pub fn primes_in(from: &Integer, to: &Integer) -> Result<Vec<Integer>> {
    let mut out = Vec::new();
    let mut p = next_prime(&(from - 1u32).max(Integer::zero()))?;
    while p <= *to {
        out.push(p.clone());
        p = next_prime(&p)?;
    }
    Ok(out)
}
