//! Assembly of the explicit torsion bound
//!
//! `#(Tor^p(A) ∩ X) ≤ deg_H([p]_* Gr_1(A)) · deg_H(ℙ(E_X)) ≤ p^{2n}(L^n) · deg_H(ℙ(E_X))`
//!
//! for a prime `p > (n-c)² deg_L(Ω_X)`.

mod pex;
mod primes;
mod slope;

pub use pex::{
    closed_form_terms, deg_abelian_bound, deg_pex, deg_pex_closed, deg_pex_geometric, inner_sums,
    segre_e_x, Convention, PexTerm, Pipeline,
};
pub use primes::{deterministic_limit, is_prime, next_prime, primes_in};
pub use slope::{slope, threshold_lemma_p, verify_slope_chain, SlopeChain};

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::chern_segre::{deg_cotangent, CompleteIntersection};
use crate::combinatorics::{w_table, z_table};
use crate::error::{Error, Result};
use crate::exact::{pow, Integer};

/// Which sign convention(s) the caller is interested in. Both are always
/// computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Paper,
    Dual,
    #[default]
    Both,
}

impl Mode {
    pub fn includes(self, convention: Convention) -> bool {
        matches!(
            (self, convention),
            (Mode::Both, _) | (Mode::Paper, Convention::Paper) | (Mode::Dual, Convention::Dual)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeChoice {
    /// The least prime above the threshold.
    Auto,
    Explicit(Integer),
}

impl fmt::Display for PrimeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeChoice::Auto => f.write_str("auto"),
            PrimeChoice::Explicit(p) => write!(f, "{p}"),
        }
    }
}

/// `2c >= n`, on top of the shape checks of [`CompleteIntersection`].
fn check_codimension(x: &CompleteIntersection) -> Result<()> {
    if 2 * x.c() < x.n() as usize {
        return Err(Error::invalid("2c >= n violated"));
    }
    Ok(())
}

/// `(n - c)² deg_L(Ω_X)`. Admissible primes are strictly larger.
pub fn threshold_debarre(x: &CompleteIntersection) -> Result<Integer> {
    check_codimension(x)?;
    let dim = Integer::from(x.dim());
    Ok(&dim * &dim * deg_cotangent(x)?)
}

/// A validated bound problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInput {
    variety: CompleteIntersection,
    prime: PrimeChoice,
    mode: Mode,
}

impl BoundInput {
    pub fn new(variety: CompleteIntersection, prime: PrimeChoice, mode: Mode) -> Result<Self> {
        let threshold = threshold_debarre(&variety)?;
        if let PrimeChoice::Explicit(p) = &prime {
            check_prime(p, &threshold)?;
        }
        Ok(BoundInput {
            variety,
            prime,
            mode,
        })
    }

    pub fn variety(&self) -> &CompleteIntersection {
        &self.variety
    }

    pub fn prime(&self) -> &PrimeChoice {
        &self.prime
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

fn check_prime(p: &Integer, threshold: &Integer) -> Result<()> {
    if !is_prime(p)? {
        return Err(Error::invalid(format!(
            "p prime violated ({p} is not prime)"
        )));
    }
    if p <= threshold {
        return Err(Error::invalid(format!("p > {threshold} violated")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// The literal formula gave `bound_paper <= 0`.
    PaperModeNonpositive,
    /// Uniform `e <= n`: below the `e > n` refinement for simple `A`.
    EBelowSimpleThreshold,
    /// Constant exponents; the uniform and multi-degree pipelines were
    /// evaluated and found equal.
    UniformSpecializationChecked,
}

/// Hypotheses of the bound that cannot be checked from the numerical data.
pub const ASSUMED_HYPOTHESES: [&str; 4] = [
    "hypersurfaces_general",
    "e_sufficiently_big",
    "x_smooth",
    "trivial_stabilizer",
];

fn decimal<T: fmt::Display, S: Serializer>(
    value: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}

fn decimal_seq<T: fmt::Display, S: Serializer>(
    values: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}

/// A row of the `h`-indexed term table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRow {
    #[serde(serialize_with = "decimal")]
    pub h: usize,
    #[serde(serialize_with = "decimal")]
    pub binomial: Integer,
    #[serde(serialize_with = "decimal")]
    pub inner_sum: Integer,
    #[serde(serialize_with = "decimal")]
    pub term_paper: Integer,
    #[serde(serialize_with = "decimal")]
    pub term_dual: Integer,
}

/// Everything computed for one `(X, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "decimal")]
    pub n: u32,
    #[serde(serialize_with = "decimal")]
    pub c: usize,
    #[serde(serialize_with = "decimal_seq")]
    pub exponents: Vec<u64>,
    #[serde(rename = "degL", serialize_with = "decimal")]
    pub deg_l: Integer,
    #[serde(serialize_with = "decimal")]
    pub p_requested: PrimeChoice,
    pub mode: Mode,
    #[serde(serialize_with = "decimal")]
    pub threshold: Integer,
    #[serde(serialize_with = "decimal")]
    pub prime_used: Integer,
    #[serde(serialize_with = "decimal")]
    pub deg_cotangent: Integer,
    /// `"W"` for `W_{m,c}`, `"Z"` for `Z_{i,c,e}`.
    pub w_table_kind: &'static str,
    #[serde(serialize_with = "decimal_seq")]
    pub w_table: Vec<Integer>,
    pub inner_sums: Vec<TermRow>,
    #[serde(serialize_with = "decimal")]
    pub deg_pex_paper: Integer,
    #[serde(serialize_with = "decimal")]
    pub deg_pex_dual: Integer,
    #[serde(serialize_with = "decimal")]
    pub deg_abelian: Integer,
    #[serde(serialize_with = "decimal")]
    pub bound_paper: Integer,
    #[serde(serialize_with = "decimal")]
    pub bound_dual: Integer,
    pub flags: Vec<Flag>,
    pub assumed_hypotheses: Vec<&'static str>,
}

impl BoundReport {
    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn bound(&self, convention: Convention) -> &Integer {
        match convention {
            Convention::Paper => &self.bound_paper,
            Convention::Dual => &self.bound_dual,
        }
    }

    pub fn deg_pex(&self, convention: Convention) -> &Integer {
        match convention {
            Convention::Paper => &self.deg_pex_paper,
            Convention::Dual => &self.deg_pex_dual,
        }
    }
}

fn agree(what: &'static str, left: &Integer, right: &Integer) -> Result<()> {
    if left != right {
        return Err(Error::PathDisagreement {
            what,
            left: left.clone(),
            right: right.clone(),
        });
    }
    Ok(())
}

/// Checks the uniform formulas against the multi-degree ones when the
/// exponents are constant.
fn check_uniform_specialization(
    x: &CompleteIntersection,
    e: u64,
    p: &Integer,
    threshold: &Integer,
) -> Result<()> {
    let c = x.c() as u64;
    let dim = Integer::from(x.dim());
    let uniform_threshold =
        &dim * &dim * Integer::from(c) * pow(&Integer::from(e), c + 1) * x.degree();
    agree(
        "threshold (uniform vs general)",
        &uniform_threshold,
        threshold,
    )?;
    for convention in [Convention::Paper, Convention::Dual] {
        let uniform = closed_form_terms(x, p, convention, Pipeline::Uniform)?;
        let multi = closed_form_terms(x, p, convention, Pipeline::MultiDegree)?;
        for (u, m) in uniform.iter().zip(&multi) {
            agree("deg_pex term (uniform vs multi-degree)", &u.term, &m.term)?;
        }
    }
    Ok(())
}

/// Computes the full report for one input.
pub fn torsion_bound(input: &BoundInput) -> Result<BoundReport> {
    let x = input.variety();
    let threshold = threshold_debarre(x)?;
    let prime = match input.prime() {
        PrimeChoice::Auto => next_prime(&threshold)?,
        PrimeChoice::Explicit(p) => {
            check_prime(p, &threshold)?;
            p.clone()
        }
    };
    report_at(x, input.prime().clone(), input.mode(), &threshold, &prime)
}

fn report_at(
    x: &CompleteIntersection,
    requested: PrimeChoice,
    mode: Mode,
    threshold: &Integer,
    p: &Integer,
) -> Result<BoundReport> {
    let dim = x.dim();
    let uniform = x.uniform_exponent();
    let (kind, table, pipeline) = match uniform {
        Some(_) => ("W", w_table(dim, x.c() as u64)?, Pipeline::Uniform),
        None => (
            "Z",
            z_table(dim, x.c(), x.exponents())?,
            Pipeline::MultiDegree,
        ),
    };

    let paper_terms = closed_form_terms(x, p, Convention::Paper, pipeline)?;
    let dual_terms = closed_form_terms(x, p, Convention::Dual, pipeline)?;
    let rows: Vec<TermRow> = paper_terms
        .into_iter()
        .zip(dual_terms)
        .map(|(a, b)| TermRow {
            h: a.h,
            binomial: a.binomial,
            inner_sum: a.inner_sum,
            term_paper: a.term,
            term_dual: b.term,
        })
        .collect();

    let deg_pex_paper = deg_pex(x, p, Convention::Paper)?;
    let deg_pex_dual = deg_pex(x, p, Convention::Dual)?;
    let table_paper: Integer = rows.iter().map(|r| &r.term_paper).sum();
    let table_dual: Integer = rows.iter().map(|r| &r.term_dual).sum();
    agree("term table (paper)", &table_paper, &deg_pex_paper)?;
    agree("term table (dual)", &table_dual, &deg_pex_dual)?;

    let deg_abelian = deg_abelian_bound(x.n(), x.degree(), p);
    let bound_paper = &deg_abelian * &deg_pex_paper;
    let bound_dual = &deg_abelian * &deg_pex_dual;

    let mut flags = Vec::new();
    if bound_paper <= Integer::from(0) {
        flags.push(Flag::PaperModeNonpositive);
    }
    if let Some(e) = uniform {
        if e <= x.n() as u64 {
            flags.push(Flag::EBelowSimpleThreshold);
        }
        check_uniform_specialization(x, e, p, threshold)?;
        flags.push(Flag::UniformSpecializationChecked);
    }

    Ok(BoundReport {
        n: x.n(),
        c: x.c(),
        exponents: x.exponents().to_vec(),
        deg_l: x.degree().clone(),
        p_requested: requested,
        mode,
        threshold: threshold.clone(),
        prime_used: p.clone(),
        deg_cotangent: deg_cotangent(x)?,
        w_table_kind: kind,
        w_table: table,
        inner_sums: rows,
        deg_pex_paper,
        deg_pex_dual,
        deg_abelian,
        bound_paper,
        bound_dual,
        flags,
        assumed_hypotheses: ASSUMED_HYPOTHESES.to_vec(),
    })
}

/// Reports for every admissible prime in `[from, to]`, ascending. Primes are
/// evaluated in parallel.
pub fn torsion_bound_sweep(
    x: &CompleteIntersection,
    mode: Mode,
    from: &Integer,
    to: &Integer,
) -> Result<Vec<BoundReport>> {
    let threshold = threshold_debarre(x)?;
    let start = from.max(&threshold).clone();
    let primes: Vec<Integer> = primes_in(&start, to)?
        .into_iter()
        .filter(|p| *p > threshold)
        .collect();
    if primes.is_empty() {
        return Err(Error::invalid(format!(
            "sweep range contains no prime p > {threshold}"
        )));
    }
    primes
        .par_iter()
        .map(|p| report_at(x, PrimeChoice::Explicit(p.clone()), mode, &threshold, p))
        .collect()
}
