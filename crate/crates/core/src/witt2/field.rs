use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest number of trial divisors tried when validating a modulus.
const IRREDUCIBILITY_BUDGET: u128 = 1 << 22;

/// `F_q = F_p[x]/(f(x))` for a monic irreducible `f` of degree `f ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    /// Monic modulus, lowest degree first.
    modulus: Vec<u64>,
}

fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`. `p` must be below `2^32`.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        Self::extension(p, &[0, 1])
    }

    /// `F_p[x]/(modulus)`, with `modulus` monic and listed lowest degree first.
    /// Irreducibility is checked by exhaustive trial division.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Arc<Self>> {
        if p >= 1 << 32 || !is_small_prime(p) {
            return Err(Error::Field(format!(
                "characteristic {p} is not a prime below 2^32"
            )));
        }
        let mut modulus: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() < 2 {
            return Err(Error::Field("modulus must have degree >= 1".into()));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::Field("modulus must be monic".into()));
        }
        let degree = modulus.len() - 1;
        if (p as f64).log2() * degree as f64 >= 120.0 {
            return Err(Error::Field("field order exceeds 2^120".into()));
        }
        let field = FiniteField { p, modulus };
        field.check_irreducible()?;
        Ok(Arc::new(field))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// `q = p^f`.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.degree() as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn check_irreducible(&self) -> Result<()> {
        let f = self.degree();
        if f == 1 {
            return Ok(());
        }
        let p = self.p as u128;
        let half = f / 2;
        let work: u128 = (1..=half).map(|k| p.pow(k as u32)).sum();
        if work > IRREDUCIBILITY_BUDGET {
            return Err(Error::Field(format!(
                "cannot validate irreducibility of a degree-{f} modulus over F_{p}: too many candidates"
            )));
        }
        for k in 1..=half {
            for index in 0..p.pow(k as u32) {
                let mut divisor = digits(index, self.p, k);
                divisor.push(1);
                if poly_rem(&self.modulus, &divisor, self.p)
                    .iter()
                    .all(|&c| c == 0)
                {
                    return Err(Error::Field(format!(
                        "modulus is reducible over F_{p} (degree-{k} factor)"
                    )));
                }
            }
        }
        Ok(())
    }

    fn reduce(&self, mut poly: Vec<u64>) -> Vec<u64> {
        let f = self.degree();
        let p = self.p;
        for top in (f..poly.len()).rev() {
            let lead = poly[top];
            if lead == 0 {
                continue;
            }
            // x^f ≡ -(m_0 + … + m_{f-1} x^{f-1})
            for k in 0..f {
                let sub = mulmod(lead, self.modulus[k], p);
                let idx = top - f + k;
                poly[idx] = (poly[idx] + p - sub) % p;
            }
            poly[top] = 0;
        }
        poly.truncate(f);
        poly.resize(f, 0);
        poly
    }

    /// The element with the given coefficients in the basis `1, x, …, x^{f-1}`.
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> FqElement {
        let coeffs = self.reduce(coeffs.iter().map(|&c| c % self.p).collect());
        FqElement {
            field: Arc::clone(self),
            coeffs,
        }
    }

    pub fn from_u64(self: &Arc<Self>, value: u64) -> FqElement {
        self.element(&[value])
    }

    pub fn zero(self: &Arc<Self>) -> FqElement {
        self.from_u64(0)
    }

    pub fn one(self: &Arc<Self>) -> FqElement {
        self.from_u64(1)
    }

    /// Every element, in lexicographic order of coefficients.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FqElement> + '_ {
        let f = self.degree();
        (0..self.order()).map(move |index| FqElement {
            field: Arc::clone(self),
            coeffs: digits(index, self.p, f),
        })
    }
}

fn digits(mut index: u128, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((index % p as u128) as u64);
        index /= p as u128;
    }
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn poly_rem(num: &[u64], monic_divisor: &[u64], p: u64) -> Vec<u64> {
    let mut r = num.to_vec();
    let d = monic_divisor.len() - 1;
    while r.len() > d {
        let lead = r.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = r.len() - d;
        for k in 0..d {
            let sub = mulmod(lead, monic_divisor[k], p);
            r[shift + k] = (r[shift + k] + p - sub) % p;
        }
    }
    r
}

/// An element of a [`FiniteField`].
///
/// Arithmetic operators panic when the operands come from different fields;
/// the Witt vector layer checks this up front and reports it as an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElement {
    field: Arc<FiniteField>,
    coeffs: Vec<u64>,
}

impl FqElement {
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The residue in `0..p` for a prime field.
    pub fn residue(&self) -> Option<u64> {
        (self.field.degree() == 1).then(|| self.coeffs[0])
    }

    fn assert_same(&self, other: &Self) {
        assert!(
            self.same_field(other),
            "operands belong to different fields"
        );
    }

    pub fn pow(&self, mut exp: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(self.pow(self.field.order() - 2))
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.field.p as u128)
    }

    /// `k · a` for an integer `k`.
    pub fn scale(&self, k: i128) -> Self {
        let p = self.field.p as i128;
        let k = k.rem_euclid(p) as u64;
        FqElement {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| mulmod(c, k, self.field.p))
                .collect(),
        }
    }
}

impl Add for &FqElement {
    type Output = FqElement;
    fn add(self, rhs: &FqElement) -> FqElement {
        self.assert_same(rhs);
        let p = self.field.p;
        FqElement {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        }
    }
}

impl Neg for &FqElement {
    type Output = FqElement;
    fn neg(self) -> FqElement {
        let p = self.field.p;
        FqElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }
}

impl Sub for &FqElement {
    type Output = FqElement;
    fn sub(self, rhs: &FqElement) -> FqElement {
        self + &(-rhs)
    }
}

impl Mul for &FqElement {
    type Output = FqElement;
    fn mul(self, rhs: &FqElement) -> FqElement {
        self.assert_same(rhs);
        let p = self.field.p;
        let f = self.field.degree();
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FqElement {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(prod),
        }
    }
}

impl fmt::Display for FqElement {
    /// A prime-field element prints as its residue; extension elements as
    /// `(c_0 c_1 … c_{f-1})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.residue() {
            return write!(f, "{r}");
        }
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f7 = FiniteField::prime(7).unwrap();
        assert_eq!(f7.order(), 7);
        let a = f7.from_u64(3);
        let b = f7.from_u64(5);
        assert_eq!((&a + &b).residue(), Some(1));
        assert_eq!((&a * &b).residue(), Some(1));
        assert_eq!((&a - &b).residue(), Some(5));
        assert_eq!(a.inverse().unwrap(), b);
        assert!(f7.zero().inverse().is_none());
    }

    #[test]
    fn fermat_on_prime_fields() {
        for p in [2, 3, 5, 7] {
            let fp = FiniteField::prime(p).unwrap();
            for a in fp.elements() {
                assert_eq!(a.frobenius(), a);
            }
        }
    }

    #[test]
    fn f4_and_f9() {
        let f4 = FiniteField::extension(2, &[1, 1, 1]).unwrap();
        let f9 = FiniteField::extension(3, &[1, 0, 1]).unwrap();
        for field in [f4, f9] {
            let q = field.order();
            let elements: Vec<_> = field.elements().collect();
            assert_eq!(elements.len() as u128, q);
            for a in &elements {
                assert_eq!(a.pow(q), *a);
                if !a.is_zero() {
                    assert_eq!(a * &a.inverse().unwrap(), field.one());
                }
            }
            // Frobenius is not the identity on a proper extension
            assert!(elements.iter().any(|a| a.frobenius() != *a));
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(FiniteField::extension(2, &[1, 0, 1]).is_err()); // (x+1)^2
        assert!(FiniteField::extension(3, &[2, 0, 1]).is_err()); // x^2 - 1
        assert!(FiniteField::extension(3, &[1, 0, 2]).is_err()); // not monic
        assert!(FiniteField::extension(4, &[1, 1, 1]).is_err());
        assert!(FiniteField::prime(1).is_err());
        // x^4 + x^3 + x^2 + x + 1 over F_2 is irreducible; (x^2+x+1)^2 = x^4 + x^2 + 1 is not
        assert!(FiniteField::extension(2, &[1, 1, 1, 1, 1]).is_ok());
        assert!(FiniteField::extension(2, &[1, 0, 1, 0, 1]).is_err());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_fields_panic() {
        let a = FiniteField::prime(3).unwrap().one();
        let b = FiniteField::prime(5).unwrap().one();
        let _ = &a + &b;
    }
}
