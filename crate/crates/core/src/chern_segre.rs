//! Chern and Segre series of a complete intersection `X = H_1 ∩ … ∩ H_c`
//! in an abelian variety `A` of dimension `n`, with `H_k ∈ |L^{e_k}|`.
//!
//! Everything lives in the subring generated by `ℓ = c_1(L|_X)`: a series
//! coefficient `k` is the integer multiple of `ℓ^k`. Since `T_A` is trivial,
//! `c(T_X) = c(N)^{-1}` with `c(N) = ∏ (1 + e_k ℓ)`.

use num_traits::One;

use crate::combinatorics::{inverse_coeff_closed_form, sym_elementary, w_coeff, z_coeff};
use crate::error::{Error, Result};
use crate::exact::{binomial, pow, sign, CycleClass, Integer, TruncatedSeries};

/// The numerical data `(n, e_1…e_c, (L^n))` of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersection {
    n: u32,
    exponents: Vec<u64>,
    degree: Integer,
}

impl CompleteIntersection {
    /// Requires `1 <= c <= n - 1`, every `e_k >= 1` and `(L^n) >= 1`.
    pub fn new(n: u32, exponents: Vec<u64>, degree: Integer) -> Result<Self> {
        let c = exponents.len();
        if c == 0 {
            return Err(Error::invalid("c >= 1 violated"));
        }
        if c as u64 >= n as u64 {
            return Err(Error::invalid("c <= n-1 violated"));
        }
        if exponents.contains(&0) {
            return Err(Error::invalid("e >= 1 violated"));
        }
        if degree < Integer::one() {
            return Err(Error::invalid("degL >= 1 violated"));
        }
        Ok(CompleteIntersection {
            n,
            exponents,
            degree,
        })
    }

    /// Convenience constructor for `c` hypersurfaces of the same degree `e`.
    pub fn uniform(n: u32, c: usize, e: u64, degree: Integer) -> Result<Self> {
        Self::new(n, vec![e; c], degree)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> usize {
        self.exponents.len()
    }

    /// `dim X = n - c`.
    pub fn dim(&self) -> usize {
        self.n as usize - self.c()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `(L^n)`.
    pub fn degree(&self) -> &Integer {
        &self.degree
    }

    /// The common exponent when all hypersurfaces share one.
    pub fn uniform_exponent(&self) -> Option<u64> {
        let first = self.exponents[0];
        self.exponents.iter().all(|&e| e == first).then_some(first)
    }

    pub fn exponent_sum(&self) -> Integer {
        self.exponents.iter().map(|&e| Integer::from(e)).sum()
    }

    pub fn exponent_product(&self) -> Integer {
        self.exponents.iter().map(|&e| Integer::from(e)).product()
    }
}

/// `c_t(N) = ∏_k (1 + e_k t)`: coefficient `j` is `e_j(exponents)`.
pub fn chern_normal(exponents: &[u64], order: usize) -> TruncatedSeries<Integer> {
    TruncatedSeries::new(order, (0..=order).map(|j| sym_elementary(exponents, j)))
}

/// `c_t(T_X) = c_t(N)^{-1}`.
pub fn chern_tangent(exponents: &[u64], order: usize) -> TruncatedSeries<Integer> {
    chern_normal(exponents, order)
        .invert()
        .expect("c_t(N) has unit constant term")
}

/// `c_t(Ω_X)`, i.e. `c_i(Ω) = (-1)^i c_i(T_X)`.
pub fn chern_cotangent(exponents: &[u64], order: usize) -> TruncatedSeries<Integer> {
    chern_tangent(exponents, order).alternate()
}

/// `s_t(Ω_X) = c_t(Ω_X)^{-1}` by series inversion.
pub fn segre_cotangent_series(exponents: &[u64], order: usize) -> TruncatedSeries<Integer> {
    chern_cotangent(exponents, order)
        .invert()
        .expect("c_t(Ω) has unit constant term")
}

/// `s_m(Ω_X)` as a multiple of `ℓ^m`.
///
/// Computed by inverting `c_t(Ω)` and, independently, by the composition
/// sum over Tangent Chern coefficients (`W_{i,c}` for a uniform exponent,
/// `Z_{i,c,e}` otherwise). The two must agree.
pub fn segre_cotangent(m: usize, exponents: &[u64], order: usize) -> Result<Integer> {
    if m > order {
        return Err(Error::invalid(format!(
            "segre index {m} exceeds working order {order}"
        )));
    }
    let by_series = segre_cotangent_series(exponents, order).coeff(m);

    let c = exponents.len();
    let first = exponents.first().copied().unwrap_or(1);
    let by_sum = if exponents.iter().all(|&e| e == first) {
        // s_m = (-e)^m Σ_β M_β ∏ W_{i,c}^{β_i}
        let ws = (1..=m)
            .map(|i| w_coeff(i, c as u64))
            .collect::<Result<Vec<_>>>()?;
        pow(&-Integer::from(first), m as u64) * inverse_coeff_closed_form(&ws, m)?
    } else {
        // s_m = Σ_β M_β ∏ ((-1)^i Z_i)^{β_i} = (-1)^m Σ_β M_β ∏ Z_i^{β_i}
        let zs = (1..=m)
            .map(|i| z_coeff(i, c, exponents))
            .collect::<Result<Vec<_>>>()?;
        sign(m as u64) * inverse_coeff_closed_form(&zs, m)?
    };

    if by_series != by_sum {
        return Err(Error::PathDisagreement {
            what: "segre_cotangent",
            left: by_series,
            right: by_sum,
        });
    }
    Ok(by_series)
}

/// Pullback by absolute Frobenius: coefficient `j` scaled by `p^j`.
pub fn frobenius_scale(
    series: &TruncatedSeries<Integer>,
    p: &Integer,
) -> Result<TruncatedSeries<Integer>> {
    if *p < Integer::from(2) {
        return Err(Error::invalid("p >= 2 violated"));
    }
    Ok(series.scale_by(|j| pow(p, j as u64)))
}

/// `∫_X ℓ^{n-c} = (∏ e_k)(L^n)`.
pub fn top_integral(x: &CompleteIntersection) -> Integer {
    x.exponent_product() * x.degree()
}

/// `deg_L Ω_X = (Σ e_k)(∏ e_k)(L^n)`, which is `c e^{c+1} (L^n)` for a
/// uniform exponent.
///
/// Checked against `∫_X c_1(Ω_X) ℓ^{n-c-1}` with `c_1(Ω)` read off the
/// inverted normal series.
pub fn deg_cotangent(x: &CompleteIntersection) -> Result<Integer> {
    let closed = x.exponent_sum() * x.exponent_product() * x.degree();

    if let Some(e) = x.uniform_exponent() {
        let c = x.c() as u64;
        let uniform = Integer::from(c) * pow(&Integer::from(e), c + 1) * x.degree();
        if uniform != closed {
            return Err(Error::PathDisagreement {
                what: "deg_cotangent (uniform)",
                left: uniform,
                right: closed,
            });
        }
    }

    let dim = x.dim();
    let top = top_integral(x);
    let c1_omega = -chern_tangent(x.exponents(), dim).coeff(1);
    let omega = CycleClass::hyperplane_power(dim, 1, c1_omega, top.clone());
    let hyper = CycleClass::hyperplane_power(dim, dim - 1, Integer::one(), top);
    let integral = omega.mul(&hyper)?.integrate();
    if integral != closed {
        return Err(Error::PathDisagreement {
            what: "deg_cotangent (integral)",
            left: closed,
            right: integral,
        });
    }
    Ok(closed)
}

/// Coefficients of `Σ_h binom(2n-2c, h) t^h` up to the working order.
pub(crate) fn hyperplane_binomials(
    x: &CompleteIntersection,
    order: usize,
) -> TruncatedSeries<Integer> {
    let top = 2 * x.dim() as u64;
    TruncatedSeries::new(order, (0..=order as u64).map(|h| binomial(top, h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn complete_intersection_validation() {
        assert!(CompleteIntersection::uniform(2, 2, 1, int(1)).is_err());
        assert!(CompleteIntersection::new(3, vec![], int(1)).is_err());
        assert!(CompleteIntersection::new(3, vec![1, 0], int(1)).is_err());
        assert!(CompleteIntersection::new(3, vec![1, 1], int(0)).is_err());
        let x = CompleteIntersection::new(4, vec![2, 3], int(1)).unwrap();
        assert_eq!(x.dim(), 2);
        assert_eq!(x.uniform_exponent(), None);
        assert_eq!(
            CompleteIntersection::uniform(4, 2, 3, int(1))
                .unwrap()
                .uniform_exponent(),
            Some(3)
        );
    }

    #[test]
    fn normal_series_examples() {
        assert_eq!(
            chern_normal(&[7], 3).coeffs(),
            ints(&[1, 7, 0, 0]).as_slice()
        );
        assert_eq!(
            chern_normal(&[1, 1], 2).coeffs(),
            ints(&[1, 2, 1]).as_slice()
        );
        assert_eq!(
            chern_normal(&[1, 2], 2).coeffs(),
            ints(&[1, 3, 2]).as_slice()
        );
        assert_eq!(
            chern_normal(&[2, 2, 2], 3).coeffs(),
            ints(&[1, 6, 12, 8]).as_slice()
        );
    }

    #[test]
    fn tangent_series_examples() {
        assert_eq!(chern_tangent(&[2, 5, 7], 3).coeff(1), int(-14));
        assert_eq!(chern_tangent(&[1, 1], 2).coeff(2), int(3));
        let exps = [1, 4, 2];
        let prod = chern_tangent(&exps, 5)
            .mul(&chern_normal(&exps, 5))
            .unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn tangent_uniform_matches_w_coefficients() {
        for c in 1..=6usize {
            for e in 1..=5u64 {
                let t = chern_tangent(&vec![e; c], 10);
                for i in 0..=10usize {
                    let expected = pow(&Integer::from(e), i as u64) * w_coeff(i, c as u64).unwrap();
                    assert_eq!(t.coeff(i), expected, "c={c} e={e} i={i}");
                }
            }
        }
    }

    #[test]
    fn segre_cotangent_examples() {
        assert_eq!(segre_cotangent(0, &[3, 3], 2).unwrap(), int(1));
        for e in 1..6u64 {
            assert_eq!(segre_cotangent(1, &[e], 1).unwrap(), -Integer::from(e));
        }
        for c in 1..5usize {
            for e in 1..4u64 {
                for m in 0..=6usize {
                    let expected = pow(&-Integer::from(e), m as u64) * binomial(c as u64, m as u64);
                    assert_eq!(segre_cotangent(m, &vec![e; c], 6).unwrap(), expected);
                }
            }
        }
        assert!(segre_cotangent(3, &[1], 2).is_err());
    }

    #[test]
    fn segre_paths_agree_non_uniform() {
        let cases: [&[u64]; 4] = [&[1, 2], &[2, 3, 5], &[6, 1, 1, 4], &[3, 6, 2, 1, 5]];
        for exps in cases {
            for m in 0..=8 {
                // e.g. s(Ω) = ∏(1 - e_k t), so s_m = (-1)^m e_m
                let expected = sign(m as u64) * sym_elementary(exps, m);
                assert_eq!(segre_cotangent(m, exps, 8).unwrap(), expected);
            }
            let prod = chern_cotangent(exps, 8)
                .mul(&segre_cotangent_series(exps, 8))
                .unwrap();
            assert!(prod.is_one());
        }
    }

    #[test]
    fn frobenius_scaling() {
        let s = TruncatedSeries::new(2, ints(&[1, 5, -3]));
        let scaled = frobenius_scale(&s, &int(2)).unwrap();
        assert_eq!(scaled.coeffs(), ints(&[1, 10, -12]).as_slice());
        assert!(frobenius_scale(&s, &int(1)).is_err());

        // s(F*Ω) for uniform e: (-pe)^m binom(c, m)
        let (c, e, p) = (3usize, 2u64, int(5));
        let scaled = frobenius_scale(&segre_cotangent_series(&vec![e; c], 4), &p).unwrap();
        for m in 0..=4u64 {
            let expected = pow(&(-&p * Integer::from(e)), m) * binomial(c as u64, m);
            assert_eq!(scaled.coeff(m as usize), expected);
        }
    }

    #[test]
    fn deg_cotangent_examples() {
        let x = CompleteIntersection::uniform(2, 1, 3, int(1)).unwrap();
        assert_eq!(deg_cotangent(&x).unwrap(), int(9));
        let y = CompleteIntersection::new(4, vec![2, 3], int(1)).unwrap();
        assert_eq!(deg_cotangent(&y).unwrap(), int(30));
        let u = CompleteIntersection::uniform(5, 3, 4, int(7)).unwrap();
        let g = CompleteIntersection::new(5, vec![4, 4, 4], int(7)).unwrap();
        assert_eq!(deg_cotangent(&u).unwrap(), deg_cotangent(&g).unwrap());
        assert_eq!(deg_cotangent(&u).unwrap(), int(3 * 256 * 7));
    }

    #[test]
    fn top_integral_examples() {
        let x = CompleteIntersection::uniform(4, 2, 1, int(5)).unwrap();
        assert_eq!(top_integral(&x), int(5));
        let y = CompleteIntersection::new(4, vec![2, 3], int(2)).unwrap();
        assert_eq!(top_integral(&y), int(12));
        let z = CompleteIntersection::uniform(6, 3, 4, int(3)).unwrap();
        assert_eq!(top_integral(&z), int(64 * 3));
    }
}
