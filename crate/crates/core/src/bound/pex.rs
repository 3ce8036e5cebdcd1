//! `deg_H ℙ(E_X)`, the degree of the projective bundle that compactifies the
//! first Greenberg transform of `X`, under `H = π^*L ⊗ O(1)`.
//!
//! Two routes are implemented and compared on every call:
//!
//! * closed form: `Σ_h binom(2n-2c, h) (σp)^{n-c-h} · S_{n-c-h} · weight`,
//!   where `S_m` is a composition sum over `C^m` of `W_{i,c}` (uniform `e`)
//!   or `Z_{i,c,e}` (general exponents);
//! * geometric: invert the Frobenius-scaled Chern series of `Ω_X` (or of its
//!   dual), multiply by `(1 + ℓ)^{2n-2c}` in the cycle ring of `X`, and
//!   integrate.
//!
//! `σ = -1` gives the formula with the sign as written; `σ = +1` is the dual
//! convention, which pairs `O(1)` powers with Segre classes of `E_X^∨`.

use serde::Serialize;

use crate::chern_segre::{
    chern_cotangent, chern_tangent, frobenius_scale, hyperplane_binomials, top_integral,
    CompleteIntersection,
};
use crate::combinatorics::{inverse_coeff_closed_form, w_table, z_table};
use crate::error::{Error, Result};
use crate::exact::{binomial, pow, CycleClass, Integer};

/// Sign convention for the Segre classes of `E_X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Paper,
    Dual,
}

impl Convention {
    fn signed_prime(self, p: &Integer) -> Integer {
        match self {
            Convention::Paper => -p,
            Convention::Dual => p.clone(),
        }
    }
}

/// Which coefficient family feeds the inner composition sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    /// `W_{i,c}` with the common exponent pulled out as `e^{n-h}`.
    Uniform,
    /// `Z_{i,c,e}` with the weight `∏ e_k`.
    MultiDegree,
}

/// One `h`-indexed summand of the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PexTerm {
    pub h: usize,
    pub binomial: Integer,
    /// `Σ_{β∈C^{n-c-h}} M_β ∏ W_{i,c}^{β_i}` or the `Z` analogue.
    pub inner_sum: Integer,
    pub term: Integer,
}

/// The inner composition sums `S_0, …, S_{n-c}`.
pub fn inner_sums(x: &CompleteIntersection, pipeline: Pipeline) -> Result<Vec<Integer>> {
    let dim = x.dim();
    let coeffs = match pipeline {
        Pipeline::Uniform => {
            if x.uniform_exponent().is_none() {
                return Err(Error::invalid("uniform pipeline needs a constant exponent"));
            }
            w_table(dim, x.c() as u64)?
        }
        Pipeline::MultiDegree => z_table(dim, x.c(), x.exponents())?,
    };
    (0..=dim)
        .map(|m| inverse_coeff_closed_form(&coeffs[1..], m))
        .collect()
}

/// Per-`h` summands of the closed form; their sum is `deg_H ℙ(E_X)`.
pub fn closed_form_terms(
    x: &CompleteIntersection,
    p: &Integer,
    convention: Convention,
    pipeline: Pipeline,
) -> Result<Vec<PexTerm>> {
    let dim = x.dim();
    let n = x.n() as u64;
    let sums = inner_sums(x, pipeline)?;
    let sp = convention.signed_prime(p);
    let weight_for = |h: usize| match pipeline {
        Pipeline::Uniform => {
            let e = Integer::from(x.uniform_exponent().expect("checked in inner_sums"));
            pow(&e, n - h as u64)
        }
        Pipeline::MultiDegree => x.exponent_product(),
    };

    Ok((0..=dim)
        .map(|h| {
            let m = dim - h;
            let binomial = binomial(2 * dim as u64, h as u64);
            let inner_sum = sums[m].clone();
            let term = &binomial * pow(&sp, m as u64) * &inner_sum * weight_for(h) * x.degree();
            PexTerm {
                h,
                binomial,
                inner_sum,
                term,
            }
        })
        .collect())
}

pub fn deg_pex_closed(
    x: &CompleteIntersection,
    p: &Integer,
    convention: Convention,
    pipeline: Pipeline,
) -> Result<Integer> {
    Ok(closed_form_terms(x, p, convention, pipeline)?
        .into_iter()
        .map(|t| t.term)
        .sum())
}

/// Segre series of `E_X` as a cycle class on `X`: `s(F^*Ω)` for the `Paper`
/// convention, `s(F^*T_X)` for the dual one.
pub fn segre_e_x(
    x: &CompleteIntersection,
    p: &Integer,
    convention: Convention,
) -> Result<CycleClass> {
    let dim = x.dim();
    let chern = match convention {
        Convention::Paper => chern_cotangent(x.exponents(), dim),
        Convention::Dual => chern_tangent(x.exponents(), dim),
    };
    let segre = frobenius_scale(&chern, p)?.invert()?;
    Ok(CycleClass::from_series(&segre, top_integral(x)))
}

/// `∫_X Σ_h binom(2n-2c, h) ℓ^h s_{n-c-h}(E_X)`.
pub fn deg_pex_geometric(
    x: &CompleteIntersection,
    p: &Integer,
    convention: Convention,
) -> Result<Integer> {
    let segre = segre_e_x(x, p, convention)?;
    let hyper = CycleClass::from_series(&hyperplane_binomials(x, x.dim()), top_integral(x));
    Ok(hyper.mul(&segre)?.integrate())
}

/// `deg_H ℙ(E_X)`, checked across both routes.
pub fn deg_pex(x: &CompleteIntersection, p: &Integer, convention: Convention) -> Result<Integer> {
    let pipeline = if x.uniform_exponent().is_some() {
        Pipeline::Uniform
    } else {
        Pipeline::MultiDegree
    };
    let closed = deg_pex_closed(x, p, convention, pipeline)?;
    let geometric = deg_pex_geometric(x, p, convention)?;
    if closed != geometric {
        return Err(Error::PathDisagreement {
            what: "deg_pex",
            left: closed,
            right: geometric,
        });
    }
    Ok(closed)
}

/// `p^{2n} (L^n)`, the degree bound for the abelian part.
pub fn deg_abelian_bound(n: u32, degree: &Integer, p: &Integer) -> Integer {
    pow(p, 2 * n as u64) * degree
}
