use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Integer;
use crate::error::{Error, Result};

/// Exact scalar usable as a series coefficient.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + From<Integer>
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + From<Integer>
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Power series `a_0 + a_1 t + … + a_N t^N` modulo `t^{N+1}`.
///
/// Always holds exactly `N + 1` coefficients. Binary operations require
/// both operands to carry the same order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Builds a series of the given order. Missing coefficients are zero;
    /// coefficients beyond `order` are dropped.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut coeffs: Vec<T> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, [T::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero above the stored order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Whether this is the constant series `1`.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n).map(|m| {
            (0..=m).fold(T::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * other.coeffs[m - k].clone()
            })
        });
        Ok(Self::new(n, coeffs))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone());
        Ok(Self::new(self.order(), coeffs))
    }

    /// Multiplicative inverse via `b_0 = 1`, `b_m = -Σ_{k=1..m} a_k b_{m-k}`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut inv: Vec<T> = Vec::with_capacity(n + 1);
        inv.push(T::one());
        for m in 1..=n {
            let s = (1..=m).fold(T::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * inv[m - k].clone()
            });
            inv.push(-s);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Multiplies coefficient `k` by `weights(k)`.
    pub fn scale_by(&self, mut weights: impl FnMut(usize) -> T) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.clone() * weights(k));
        Self::new(self.order(), coeffs)
    }

    /// Substitutes `t -> -t`.
    pub fn alternate(&self) -> Self {
        self.scale_by(|k| if k % 2 == 0 { T::one() } else { -T::one() })
    }
}

impl<T: Coefficient> fmt::Display for TruncatedSeries<T> {
    /// Comma-separated coefficients, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
