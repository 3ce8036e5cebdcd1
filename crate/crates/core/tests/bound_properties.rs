use mmbound::bound::{
    closed_form_terms, deg_pex_closed, deg_pex_geometric, next_prime, threshold_debarre,
    threshold_lemma_p, torsion_bound_sweep, verify_slope_chain, Convention, Mode, Pipeline,
};
use mmbound::chern_segre::{
    chern_cotangent, chern_tangent, deg_cotangent, segre_cotangent, segre_cotangent_series,
    CompleteIntersection,
};
use mmbound::combinatorics::w_coeff;
use mmbound::exact::{pow, Integer};
use proptest::prelude::*;

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn variety() -> impl Strategy<Value = CompleteIntersection> {
    (2u32..=8)
        .prop_flat_map(|n| (Just(n), (n as usize).div_ceil(2)..n as usize))
        .prop_flat_map(|(n, c)| (Just(n), prop::collection::vec(1u64..=6, c), 1i64..=3))
        .prop_map(|(n, e, d)| CompleteIntersection::new(n, e, int(d)).unwrap())
}

fn prime() -> impl Strategy<Value = Integer> {
    prop::sample::select(vec![2i64, 3, 5, 101]).prop_map(int)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closed_form_equals_geometric(x in variety(), p in prime()) {
        for conv in [Convention::Paper, Convention::Dual] {
            let closed = deg_pex_closed(&x, &p, conv, Pipeline::MultiDegree).unwrap();
            prop_assert_eq!(closed, deg_pex_geometric(&x, &p, conv).unwrap());
        }
    }

    #[test]
    fn dual_is_positive(x in variety(), p in prime()) {
        prop_assert!(deg_pex_closed(&x, &p, Convention::Dual, Pipeline::MultiDegree).unwrap() > int(0));
    }

    #[test]
    fn paper_terms_alternate_against_dual(x in variety(), p in prime()) {
        let paper = closed_form_terms(&x, &p, Convention::Paper, Pipeline::MultiDegree).unwrap();
        let dual = closed_form_terms(&x, &p, Convention::Dual, Pipeline::MultiDegree).unwrap();
        let dim = x.dim();
        prop_assert_eq!(paper.len(), dual.len());
        for (a, b) in paper.iter().zip(&dual) {
            prop_assert_eq!(a.h, b.h);
            prop_assert!(b.term >= int(0));
            let expected = if (dim - a.h) % 2 == 1 { -b.term.clone() } else { b.term.clone() };
            prop_assert_eq!(&a.term, &expected);
        }
    }

    #[test]
    fn segre_paths_agree(x in variety()) {
        let order = x.dim();
        let series = segre_cotangent_series(x.exponents(), order);
        for m in 0..=order {
            prop_assert_eq!(segre_cotangent(m, x.exponents(), order).unwrap(), series.coeff(m));
        }
        prop_assert!(chern_cotangent(x.exponents(), order).mul(&series).unwrap().is_one());
    }

    #[test]
    fn cotangent_degree_routes_agree(x in variety()) {
        let expected = x.exponent_sum() * x.exponent_product() * x.degree();
        prop_assert_eq!(deg_cotangent(&x).unwrap(), expected);
    }
}

#[test]
fn uniform_tangent_coefficients() {
    for c in 1..=6usize {
        for e in 1..=5u64 {
            let series = chern_tangent(&vec![e; c], 10);
            for i in 1..=10usize {
                let expected = pow(&Integer::from(e), i as u64) * w_coeff(i, c as u64).unwrap();
                assert_eq!(series.coeff(i), expected);
            }
        }
    }
}

#[test]
fn bound_dual_strictly_increasing_in_p() {
    let cases: [(u32, Vec<u64>, i64); 4] = [
        (2, vec![2], 1),
        (3, vec![1, 2], 1),
        (4, vec![2, 3], 1),
        (5, vec![1, 1, 2], 2),
    ];
    for (n, e, d) in cases {
        let x = CompleteIntersection::new(n, e, int(d)).unwrap();
        let t = threshold_debarre(&x).unwrap();
        let reports = torsion_bound_sweep(&x, Mode::Both, &t, &(&t + 400u32)).unwrap();
        assert!(reports.len() > 5);
        for pair in reports.windows(2) {
            assert!(pair[0].prime_used < pair[1].prime_used);
            assert!(pair[0].bound_dual < pair[1].bound_dual);
        }
    }
}

#[test]
fn threshold_requires_half_codimension() {
    let x = CompleteIntersection::uniform(5, 2, 2, int(1)).unwrap();
    let err = threshold_debarre(&x).unwrap_err();
    assert!(err.to_string().contains("2c >= n violated"));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn slope_chain_suffices() {
    for n in 1..=10u32 {
        for deg in 1..=50i64 {
            let deg = int(deg);
            let p = next_prime(&threshold_lemma_p(n, &deg)).unwrap();
            assert!(verify_slope_chain(n, &deg, &p).all(), "n={n} deg={deg}");
        }
    }
}

#[test]
fn slope_chain_fails_at_threshold() {
    // p equal to n² deg(Ω) is rejected by the strict comparison
    let chain = verify_slope_chain(2, &int(9), &int(36));
    assert!(!chain.above_threshold);
}
