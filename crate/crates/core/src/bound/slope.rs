//! The rational inequality chain that makes `p > n² deg(Ω)` sufficient for
//! `μ_min(F^{k*}Ω) > μ_max(Ω)`, evaluated at the extremal slopes
//! `μ_min = 1/n` and `μ_max = deg(Ω) - 1`.

use num_traits::One;

use crate::exact::{Integer, Rational};

/// `μ(V) = deg_L(V) / rk(V)`.
pub fn slope(degree: &Integer, rank: u32) -> Rational {
    Rational::new(degree.clone(), Integer::from(rank))
}

/// `n² deg(Ω)`; admissible primes lie strictly above it.
pub fn threshold_lemma_p(n_dim: u32, deg_omega: &Integer) -> Integer {
    Integer::from(n_dim) * Integer::from(n_dim) * deg_omega
}

/// Truth value of each step in the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeChain {
    /// `p > n² deg(Ω)`.
    pub above_threshold: bool,
    /// `p > 2n - 1`, the semistable case.
    pub semistable_bound: bool,
    /// `(p + 1 - n) μ_min > n μ_max` with `μ_min = 1/n`, `μ_max = deg(Ω) - 1`.
    pub slope_inequality: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl SlopeChain {
    pub fn all(&self) -> bool {
        self.above_threshold && self.semistable_bound && self.slope_inequality
    }
}

pub fn verify_slope_chain(n_dim: u32, deg_omega: &Integer, p: &Integer) -> SlopeChain {
    let n = Integer::from(n_dim);
    let mu_min = slope(&Integer::one(), n_dim);
    // deg(M) <= deg(Ω) - 1 bounds μ_max for a proper destabilizing M
    let mu_max = Rational::from_integer(deg_omega - 1u32);
    let lhs = Rational::from_integer(p + 1u32 - &n) * mu_min;
    let rhs = Rational::from_integer(n.clone()) * mu_max;
    SlopeChain {
        above_threshold: *p > threshold_lemma_p(n_dim, deg_omega),
        semistable_bound: *p > Integer::from(2u32) * &n - 1u32,
        slope_inequality: lhs > rhs,
        lhs,
        rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn slope_is_reduced() {
        let s = slope(&int(6), 4);
        assert_eq!(*s.numer(), int(3));
        assert_eq!(*s.denom(), int(2));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold_lemma_p(2, &int(9)), int(36));
        assert_eq!(threshold_lemma_p(1, &int(1)), int(1));
        for n in 1..30u32 {
            for d in 1..30i64 {
                assert!(threshold_lemma_p(n, &int(d)) >= int(2 * n as i64 - 1));
            }
        }
    }

    #[test]
    fn chain_examples() {
        let c = verify_slope_chain(3, &int(5), &int(47));
        assert!(c.above_threshold && c.semistable_bound && c.slope_inequality);
        assert_eq!(c.lhs, Rational::from_integer(int(15)));
        assert_eq!(c.rhs, Rational::from_integer(int(12)));

        assert!(verify_slope_chain(1, &int(1), &int(2)).all());

        let c = verify_slope_chain(2, &int(9), &int(37));
        assert_eq!(c.lhs, Rational::from_integer(int(18)));
        assert_eq!(c.rhs, Rational::from_integer(int(16)));
        assert!(c.all());
    }

    #[test]
    fn threshold_is_strict() {
        let c = verify_slope_chain(2, &int(9), &int(36));
        assert!(!c.above_threshold);
        let c = verify_slope_chain(3, &int(1), &int(3));
        assert!(!c.semistable_bound);
    }
}
