use num_traits::Zero;

use super::{Integer, TruncatedSeries};
use crate::error::{Error, Result};

/// A class `Σ_k g_k ℓ^k` on an `m`-dimensional variety, where `ℓ` is the
/// hyperplane class and `∫ ℓ^m` is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    coeffs: Vec<Integer>,
    top_integral: Integer,
}

impl CycleClass {
    /// Coefficients beyond `top_codim` vanish for dimension reasons and are
    /// dropped.
    pub fn new(
        top_codim: usize,
        coeffs: impl IntoIterator<Item = Integer>,
        top_integral: Integer,
    ) -> Self {
        let mut coeffs: Vec<Integer> = coeffs.into_iter().take(top_codim + 1).collect();
        coeffs.resize(top_codim + 1, Integer::zero());
        CycleClass {
            coeffs,
            top_integral,
        }
    }

    pub fn zero(top_codim: usize, top_integral: Integer) -> Self {
        Self::new(top_codim, [], top_integral)
    }

    /// `k · ℓ^j`.
    pub fn hyperplane_power(top_codim: usize, j: usize, k: Integer, top_integral: Integer) -> Self {
        let mut coeffs = vec![Integer::zero(); top_codim + 1];
        if j <= top_codim {
            coeffs[j] = k;
        }
        CycleClass {
            coeffs,
            top_integral,
        }
    }

    /// Reads a series in the class variable as a cycle class of matching
    /// top codimension.
    pub fn from_series(series: &TruncatedSeries<Integer>, top_integral: Integer) -> Self {
        Self::new(
            series.order(),
            series.coeffs().iter().cloned(),
            top_integral,
        )
    }

    pub fn top_codim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn top_integral(&self) -> &Integer {
        &self.top_integral
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.top_codim() != other.top_codim() || self.top_integral != other.top_integral {
            return Err(Error::CycleMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b);
        Ok(Self::new(
            self.top_codim(),
            coeffs,
            self.top_integral.clone(),
        ))
    }

    /// Intersection product, truncated above the top codimension.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.top_codim();
        let mut out = vec![Integer::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Ok(CycleClass {
            coeffs: out,
            top_integral: self.top_integral.clone(),
        })
    }

    /// Degree of the top-codimension component.
    pub fn integrate(&self) -> Integer {
        &self.coeffs[self.top_codim()] * &self.top_integral
    }
}
