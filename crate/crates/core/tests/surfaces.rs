use itertools::Itertools;
use motivic_core::surface::{
    closed_form, evaluate_in_order, evaluate_tqft, evaluate_word, parse_word, word_to_spec, BordismWord,
};
use motivic_core::{FormulaVariant, Scalar, SurfaceSpec};
use proptest::prelude::*;

fn q() -> Scalar {
    Scalar::q()
}
fn lin(c: i64) -> Scalar {
    Scalar::poly(&[c, 1])
}

fn eval(g: u32, rp: u32, rm: u32, t: u32) -> Scalar {
    evaluate_tqft(&SurfaceSpec::new(g, rp, rm, t)).unwrap()
}

#[test]
fn frozen_values() {
    let c = q() * lin(-1) * lin(1);
    assert!(eval(0, 0, 0, 0).is_one());
    assert!(eval(0, 0, 0, 2).is_one());
    assert!(eval(0, 1, 0, 0).is_zero());
    assert!(eval(0, 1, 0, 1).is_zero());
    assert_eq!(eval(0, 2, 0, 0), lin(-1) * lin(1));
    assert_eq!(eval(0, 3, 0, 0), lin(-2) * lin(-1) * lin(1));
    assert_eq!(eval(1, 0, 0, 0), &c * lin(4));
    assert_eq!(eval(1, 1, 0, 0), q() * lin(-3) * lin(-1) * lin(1).pow(2));
    assert_eq!(eval(1, 0, 1, 0), q().pow(2) * lin(-1) * lin(1) * lin(3));
    assert_eq!(eval(1, 0, 0, 1), c.clone());
    assert_eq!(eval(1, 2, 0, 0), q() * lin(-1) * lin(1).pow(2) * Scalar::poly(&[3, 0, 0, 1]));
    assert_eq!(eval(2, 0, 0, 0), &c * Scalar::poly(&[1, 0, 13, 3, 13, 1, 1]));
}

#[test]
fn section5_grid() {
    for spec in SurfaceSpec::grid(4, 3) {
        assert_eq!(
            closed_form(&spec, FormulaVariant::Section5).unwrap(),
            evaluate_tqft(&spec).unwrap(),
            "{spec}"
        );
    }
}

#[test]
fn every_ordering_agrees() {
    for spec in SurfaceSpec::grid(2, 3) {
        let want = evaluate_tqft(&spec).unwrap();
        let tubes = BordismWord::for_spec(&spec).tubes();
        for perm in tubes.iter().copied().permutations(tubes.len()).unique() {
            assert_eq!(evaluate_in_order(&perm).unwrap(), want, "{spec} {perm:?}");
        }
    }
}

#[test]
fn sign_parity_law() {
    // for r > 0 the value depends only on (g, r, sign)
    for g in 0..=2 {
        for spec in SurfaceSpec::grid(g, 4).into_iter().filter(|s| s.genus == g && s.r() > 0) {
            let canon = if spec.sigma() == 1 {
                SurfaceSpec::new(g, spec.r(), 0, 0)
            } else {
                SurfaceSpec::new(g, spec.r() - 1, 1, 0)
            };
            assert_eq!(evaluate_tqft(&spec).unwrap(), evaluate_tqft(&canon).unwrap(), "{spec}");
        }
    }
}

#[test]
fn words_evaluate_literally() {
    let w = parse_word("Dt . MI . JM . L . JP . L . D").unwrap();
    assert_eq!(word_to_spec(&w), SurfaceSpec::new(2, 1, 1, 1));
    assert_eq!(evaluate_word(&w).unwrap(), eval(2, 1, 1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn parity_reduction(g in 0u32..3, rp in 0u32..3, rm in 0u32..3, t in 0u32..2) {
        prop_assert_eq!(eval(g, rp, rm, t + 2), eval(g, rp, rm, t));
    }

    #[test]
    fn results_are_integer_polynomials(g in 0u32..4, rp in 0u32..3, rm in 0u32..3, t in 0u32..3) {
        prop_assert!(eval(g, rp, rm, t).as_int_poly().is_some());
    }
}
