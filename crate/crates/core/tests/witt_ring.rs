use std::sync::Arc;

use mmbound::witt2::{FiniteField, WittPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pair(field: &Arc<FiniteField>, rng: &mut ChaCha8Rng) -> WittPair {
    let f = field.degree();
    let p = field.characteristic();
    let mut coeffs = || (0..f).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>();
    let a0 = field.element(&coeffs());
    let a1 = field.element(&coeffs());
    WittPair::new(a0, a1).unwrap()
}

fn assert_ring_axioms(x: &WittPair, y: &WittPair, z: &WittPair) {
    let add = |a: &WittPair, b: &WittPair| a.add(b).unwrap();
    let mul = |a: &WittPair, b: &WittPair| a.mul(b).unwrap();
    assert_eq!(add(&add(x, y), z), add(x, &add(y, z)), "{x} {y} {z}");
    assert_eq!(mul(&mul(x, y), z), mul(x, &mul(y, z)), "{x} {y} {z}");
    assert_eq!(
        mul(x, &add(y, z)),
        add(&mul(x, y), &mul(x, z)),
        "{x} {y} {z}"
    );
    assert_eq!(add(x, y), add(y, x));
    assert_eq!(mul(x, y), mul(y, x));
    assert!(add(x, &x.neg()).is_zero());
    assert_eq!(x.sub(y).unwrap(), add(x, &y.neg()));
}

fn assert_frobenius_hom(x: &WittPair, y: &WittPair) {
    assert_eq!(
        x.add(y).unwrap().frobenius(),
        x.frobenius().add(&y.frobenius()).unwrap()
    );
    assert_eq!(
        x.mul(y).unwrap().frobenius(),
        x.frobenius().mul(&y.frobenius()).unwrap()
    );
}

#[test]
fn exhaustive_axioms_small_primes() {
    for p in [2, 3, 5] {
        let field = FiniteField::prime(p).unwrap();
        let all = WittPair::all(&field);
        assert_eq!(all.len() as u64, p * p);
        for x in &all {
            assert_eq!(x.add(&WittPair::zero(&field)).unwrap(), *x);
            assert_eq!(x.mul(&WittPair::one(&field)).unwrap(), *x);
            for y in &all {
                assert_frobenius_hom(x, y);
                for z in &all {
                    assert_ring_axioms(x, y, z);
                }
            }
        }
    }
}

#[test]
fn random_axioms_larger_fields() {
    let fields = [
        FiniteField::prime(7).unwrap(),
        FiniteField::extension(2, &[1, 1, 1]).unwrap(),
        FiniteField::extension(3, &[1, 0, 1]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for field in &fields {
        for _ in 0..10_000 {
            let x = random_pair(field, &mut rng);
            let y = random_pair(field, &mut rng);
            let z = random_pair(field, &mut rng);
            assert_ring_axioms(&x, &y, &z);
            assert_frobenius_hom(&x, &y);
        }
    }
}

#[test]
fn frobenius_verschiebung_is_p() {
    for p in [2, 3, 5] {
        let field = FiniteField::prime(p).unwrap();
        for x in WittPair::all(&field) {
            assert_eq!(x.frobenius().verschiebung(), x.times(p));
            assert_eq!(x.verschiebung().frobenius(), x.times(p));
        }
    }
}

#[test]
fn ghost_map_is_isomorphism() {
    for p in [2u64, 3, 5, 7] {
        let field = FiniteField::prime(p).unwrap();
        let m = (p * p) as u128;
        let all = WittPair::all(&field);
        let mut seen = vec![false; m as usize];
        for x in &all {
            let g = x.ghost1().unwrap();
            assert!(!seen[g as usize], "ghost1 not injective at {x}");
            seen[g as usize] = true;
            let a0 = x.a0().residue().unwrap() as u128;
            assert_eq!(g % p as u128, a0.pow(p as u32) % p as u128);
            for y in &all {
                let h = y.ghost1().unwrap();
                assert_eq!(x.add(y).unwrap().ghost1().unwrap(), (g + h) % m);
                assert_eq!(x.mul(y).unwrap().ghost1().unwrap(), g * h % m);
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(WittPair::one(&field).ghost1().unwrap(), 1);
    }
}

#[test]
fn teichmuller_is_multiplicative() {
    let field = FiniteField::extension(3, &[1, 0, 1]).unwrap();
    let elements: Vec<_> = field.elements().collect();
    for a in &elements {
        for b in &elements {
            let lhs = WittPair::teichmuller(a * b);
            let rhs = WittPair::teichmuller(a.clone())
                .mul(&WittPair::teichmuller(b.clone()))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn mixed_fields_are_rejected() {
    let f3 = FiniteField::prime(3).unwrap();
    let f5 = FiniteField::prime(5).unwrap();
    let x = WittPair::one(&f3);
    let y = WittPair::one(&f5);
    assert!(x.add(&y).is_err());
    assert!(x.mul(&y).is_err());
    assert!(WittPair::new(f3.one(), f5.one()).is_err());
}

#[test]
fn reducible_modulus_is_rejected() {
    // x^2 + 1 = (x + 1)^2 over F_2
    assert!(FiniteField::extension(2, &[1, 0, 1]).is_err());
    assert!(FiniteField::extension(4, &[0, 1]).is_err());
}
