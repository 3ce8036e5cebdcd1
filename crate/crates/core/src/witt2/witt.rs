use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::ToPrimitive;

use super::field::{FiniteField, FqElement};
use crate::error::{Error, Result};
use crate::exact::{binomial, Integer, Rational};

/// `P_p(X, Y) = (X^p + Y^p - (X + Y)^p) / p`, the carry of Witt addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarryPolynomial {
    p: u64,
    /// `(k, coefficient)` for the monomial `X^k Y^{p-k}`, `0 < k < p`.
    terms: Vec<(u64, Integer)>,
}

impl CarryPolynomial {
    fn build(p: u64) -> Self {
        let prime = Integer::from(p);
        let terms = (1..p)
            .map(|k| {
                // X^p and Y^p cancel, leaving -binom(p, k) X^k Y^{p-k}
                let q = Rational::new(-binomial(p, k), prime.clone());
                assert!(q.is_integer(), "binom({p}, {k}) not divisible by {p}");
                (k, q.to_integer())
            })
            .collect();
        CarryPolynomial { p, terms }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> &[(u64, Integer)] {
        &self.terms
    }

    /// Evaluates over `F_q` after reducing coefficients mod `p`.
    pub fn eval(&self, x: &FqElement, y: &FqElement) -> FqElement {
        let field = x.field();
        let modulus = Integer::from(self.p);
        let mut acc = field.zero();
        for (k, coeff) in &self.terms {
            let c = ((coeff % &modulus + &modulus) % &modulus)
                .to_u64()
                .expect("reduced mod p");
            if c == 0 {
                continue;
            }
            let monomial = &x.pow(*k as u128) * &y.pow((self.p - k) as u128);
            acc = &acc + &monomial.scale(c as i128);
        }
        acc
    }
}

/// Carry polynomial for characteristic `p`, built once and shared.
pub fn carry_polynomial(p: u64) -> Arc<CarryPolynomial> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CarryPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(poly) = cache.read().expect("carry cache poisoned").get(&p) {
        return Arc::clone(poly);
    }
    let mut guard = cache.write().expect("carry cache poisoned");
    Arc::clone(
        guard
            .entry(p)
            .or_insert_with(|| Arc::new(CarryPolynomial::build(p))),
    )
}

/// `(a_0, a_1) ∈ W_2(F_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittPair {
    a0: FqElement,
    a1: FqElement,
}

impl WittPair {
    pub fn new(a0: FqElement, a1: FqElement) -> Result<Self> {
        if !a0.same_field(&a1) {
            return Err(Error::MixedFields);
        }
        Ok(WittPair { a0, a1 })
    }

    /// Pair of residues in the prime field `F_p`.
    pub fn from_residues(field: &Arc<FiniteField>, a0: u64, a1: u64) -> Self {
        WittPair {
            a0: field.from_u64(a0),
            a1: field.from_u64(a1),
        }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Self::teichmuller(field.zero())
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::teichmuller(field.one())
    }

    /// `a ↦ (a, 0)`.
    pub fn teichmuller(a: FqElement) -> Self {
        let a1 = a.field().zero();
        WittPair { a0: a, a1 }
    }

    pub fn a0(&self) -> &FqElement {
        &self.a0
    }

    pub fn a1(&self) -> &FqElement {
        &self.a1
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.a0.field()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !self.a0.same_field(&other.a0) {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    /// `(a_0 + b_0, a_1 + b_1 + P_p(a_0, b_0))`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let carry = carry_polynomial(self.field().characteristic()).eval(&self.a0, &other.a0);
        Ok(WittPair {
            a0: &self.a0 + &other.a0,
            a1: &(&self.a1 + &other.a1) + &carry,
        })
    }

    /// `(a_0 b_0, a_0^p b_1 + b_0^p a_1)`; the `p a_1 b_1` term is zero in
    /// characteristic `p`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let cross = &(&self.a0.frobenius() * &other.a1) + &(&other.a0.frobenius() * &self.a1);
        Ok(WittPair {
            a0: &self.a0 * &other.a0,
            a1: cross,
        })
    }

    /// Additive inverse: `(-a_0, -a_1 - P_p(a_0, -a_0))`.
    pub fn neg(&self) -> Self {
        let minus_a0 = -&self.a0;
        let carry = carry_polynomial(self.field().characteristic()).eval(&self.a0, &minus_a0);
        WittPair {
            a0: minus_a0,
            a1: &(-&self.a1) - &carry,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `k`-fold sum `x + … + x`.
    pub fn times(&self, k: u64) -> Self {
        let mut acc = Self::zero(self.field());
        for _ in 0..k {
            acc = acc.add(self).expect("same field");
        }
        acc
    }

    /// `F(a_0, a_1) = (a_0^p, a_1^p)`.
    pub fn frobenius(&self) -> Self {
        WittPair {
            a0: self.a0.frobenius(),
            a1: self.a1.frobenius(),
        }
    }

    /// `V(a_0, a_1) = (0, a_0)`.
    pub fn verschiebung(&self) -> Self {
        WittPair {
            a0: self.field().zero(),
            a1: self.a0.clone(),
        }
    }

    /// `ã_0^p + p ã_1 mod p²` for the integer lifts `ã_i ∈ [0, p)`.
    /// Only defined over a prime field.
    pub fn ghost1(&self) -> Result<u128> {
        let (Some(a0), Some(a1)) = (self.a0.residue(), self.a1.residue()) else {
            return Err(Error::Field(
                "ghost1 needs a prime field (no canonical lift over F_q, q > p)".into(),
            ));
        };
        let p = self.field().characteristic() as u128;
        let modulus = p * p;
        let mut power = 1u128;
        for _ in 0..p {
            power = power * a0 as u128 % modulus;
        }
        Ok((power + p * a1 as u128) % modulus)
    }

    /// Every element of `W_2(F_q)`.
    pub fn all(field: &Arc<FiniteField>) -> Vec<Self> {
        let elems: Vec<FqElement> = field.elements().collect();
        elems
            .iter()
            .flat_map(|a0| {
                elems.iter().map(move |a1| WittPair {
                    a0: a0.clone(),
                    a1: a1.clone(),
                })
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a0 == self.field().one() && self.a1.is_zero()
    }
}

impl fmt::Display for WittPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a0, self.a1)
    }
}
