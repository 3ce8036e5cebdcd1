//! Composition sums behind the Chern/Segre inversion formulas.
//!
//! A [`CompositionMultiset`] of weight `m` records multiplicities
//! `(r_1, r_2, …)` with `Σ i·r_i = m`, i.e. an integer partition of `m`.
//! Summing `M_β ∏ a_i^{β_i}` over all of them gives the `m`-th coefficient of
//! `(1 + a_1 t + a_2 t² + …)^{-1}`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, pow, Coefficient, Integer};

/// Largest weight accepted by the enumerator.
pub const MAX_WEIGHT: usize = 64;

/// Multiplicity encoding `(r_1, …, r_m)` of a partition of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionMultiset {
    multiplicities: Vec<u32>,
    weight: usize,
}

impl CompositionMultiset {
    /// `multiplicities[i - 1]` is `r_i`. The stored sequence is padded or
    /// trimmed to length equal to the weight.
    pub fn new(multiplicities: impl IntoIterator<Item = u32>) -> Self {
        let mut multiplicities: Vec<u32> = multiplicities.into_iter().collect();
        let weight = multiplicities
            .iter()
            .enumerate()
            .map(|(i, &r)| (i + 1) * r as usize)
            .sum();
        multiplicities.resize(weight, 0);
        CompositionMultiset {
            multiplicities,
            weight,
        }
    }

    pub fn empty() -> Self {
        CompositionMultiset {
            multiplicities: Vec::new(),
            weight: 0,
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `r_i` for `i >= 1`; zero past the weight.
    pub fn multiplicity(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.multiplicities.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Number of parts `Σ r_i`.
    pub fn part_count(&self) -> u64 {
        self.multiplicities.iter().map(|&r| r as u64).sum()
    }

    /// `(index, r_i)` pairs with `r_i > 0`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (i + 1, r))
    }
}

impl fmt::Display for CompositionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, r) in self.multiplicities.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

fn check_weight(m: usize) -> Result<()> {
    if m > MAX_WEIGHT {
        return Err(Error::WeightCap {
            weight: m,
            cap: MAX_WEIGHT,
        });
    }
    Ok(())
}

/// Visits every element of `C^m`, largest part first, in decreasing order of
/// the largest part.
pub fn for_each_composition(m: usize, mut visit: impl FnMut(&CompositionMultiset)) -> Result<()> {
    check_weight(m)?;
    let mut current = CompositionMultiset {
        multiplicities: vec![0; m],
        weight: m,
    };
    descend(m, m, &mut current, &mut visit);
    Ok(())
}

fn descend(
    remaining: usize,
    max_part: usize,
    current: &mut CompositionMultiset,
    visit: &mut impl FnMut(&CompositionMultiset),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.multiplicities[part - 1] += 1;
        descend(remaining - part, part, current, visit);
        current.multiplicities[part - 1] -= 1;
    }
}

/// All of `C^m` in canonical order.
pub fn enumerate_compositions(m: usize) -> Result<Vec<CompositionMultiset>> {
    let mut out = Vec::new();
    for_each_composition(m, |beta| out.push(beta.clone()))?;
    Ok(out)
}

/// `M_β = (-1)^{Σβ_i} · (Σβ_i)! / ∏ β_i!`.
pub fn m_coeff(beta: &CompositionMultiset) -> Integer {
    let mut running = 0u64;
    let mut multinomial = Integer::one();
    for (_, r) in beta.nonzero() {
        running += r as u64;
        multinomial *= binomial(running, r as u64);
    }
    if running % 2 == 1 {
        -multinomial
    } else {
        multinomial
    }
}

/// `R^c_β = ∏_j binom(c, j)^{β_j}`.
pub fn r_coeff(c: u64, beta: &CompositionMultiset) -> Integer {
    beta.nonzero()
        .map(|(j, r)| pow(&binomial(c, j as u64), r as u64))
        .fold(Integer::one(), |acc, x| acc * x)
}

/// `W_{m,c} = Σ_{β∈C^m} M_β R^c_β`, the coefficient of `t^m` in `(1+t)^{-c}`.
pub fn w_coeff(m: usize, c: u64) -> Result<Integer> {
    let mut sum = Integer::zero();
    for_each_composition(m, |beta| sum += m_coeff(beta) * r_coeff(c, beta))?;
    Ok(sum)
}

/// `(W_{0,c}, …, W_{max_m,c})`.
pub fn w_table(max_m: usize, c: u64) -> Result<Vec<Integer>> {
    (0..=max_m).map(|m| w_coeff(m, c)).collect()
}

fn check_exponents(c: usize, exponents: &[u64]) -> Result<()> {
    if exponents.len() != c {
        return Err(Error::ExponentCount {
            expected: c,
            got: exponents.len(),
        });
    }
    Ok(())
}

/// `Z_{i,c,e} = Σ_{β∈C^i} M_β ∏_j e_j(e)^{β_j}` with `e_j` the elementary
/// symmetric polynomials of the exponents: the coefficient of `t^i` in
/// `∏ (1 + e_k t)^{-1}`.
pub fn z_coeff(i: usize, c: usize, exponents: &[u64]) -> Result<Integer> {
    check_exponents(c, exponents)?;
    let elementary: Vec<Integer> = (1..=i).map(|j| sym_elementary(exponents, j)).collect();
    inverse_coeff_closed_form(&elementary, i)
}

/// `(Z_{0,c,e}, …, Z_{max_i,c,e})`.
pub fn z_table(max_i: usize, c: usize, exponents: &[u64]) -> Result<Vec<Integer>> {
    (0..=max_i).map(|i| z_coeff(i, c, exponents)).collect()
}

/// Coefficient `m` of `(1 + a_1 t + a_2 t² + …)^{-1}` as the composition sum
/// `Σ_{β∈C^m} M_β ∏ a_i^{β_i}`. Entries of `head` past its length are zero.
pub fn inverse_coeff_closed_form<T: Coefficient>(head: &[T], m: usize) -> Result<T> {
    let a = |i: usize| head.get(i - 1).cloned().unwrap_or_else(T::zero);
    let mut sum = T::zero();
    for_each_composition(m, |beta| {
        let mut term = T::from(m_coeff(beta));
        for (i, r) in beta.nonzero() {
            let ai = a(i);
            for _ in 0..r {
                term = term * ai.clone();
            }
        }
        sum = sum.clone() + term;
    })?;
    Ok(sum)
}

/// Elementary symmetric polynomial `e_j` of the exponents.
pub fn sym_elementary(exponents: &[u64], j: usize) -> Integer {
    // e_k(x_1..x_r) = e_k(x_1..x_{r-1}) + x_r e_{k-1}(x_1..x_{r-1})
    let mut e = vec![Integer::zero(); j + 1];
    e[0] = Integer::one();
    for &x in exponents {
        let x = Integer::from(x);
        for k in (1..=j).rev() {
            let prev = &e[k - 1] * &x;
            e[k] += prev;
        }
    }
    e.swap_remove(j)
}

/// Complete homogeneous symmetric polynomial `h_i` of the exponents.
pub fn sym_complete(exponents: &[u64], i: usize) -> Integer {
    // h_k(x_1..x_r) = h_k(x_1..x_{r-1}) + x_r h_{k-1}(x_1..x_r)
    let mut h = vec![Integer::zero(); i + 1];
    h[0] = Integer::one();
    for &x in exponents {
        let x = Integer::from(x);
        for k in 1..=i {
            let prev = &h[k - 1] * &x;
            h[k] += prev;
        }
    }
    h.swap_remove(i)
}
