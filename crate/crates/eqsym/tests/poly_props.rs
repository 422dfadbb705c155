mod common;

use common::*;
use eqsym::{parse_poly, DepletedAlphabet, Poly, Var};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_is_exact(f in poly_strategy(4, 3, 6, 2), i in 1u32..=4, a in alphabet_strategy(5, 3)) {
        let e = f.e_trim(i, &a);
        let lin = Poly::x(i) - Poly::t(a.nth_remaining(i));
        let lhs = if f.max_x_index() < i { Poly::zero() } else { &lin * &e };
        let rhs = if f.max_x_index() < i { Poly::zero() } else { f.r_shift(i, true, &a) - f.r_shift(i, false, &a) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quasisymmetry_matches_trims(f in poly_strategy(3, 2, 5, 2)) {
        let n = 3;
        let trims = (1..n).all(|i| f.e_trim(i, &DepletedAlphabet::empty()).is_zero());
        prop_assert_eq!(f.is_equivariantly_quasisymmetric(n).unwrap(), trims);
    }

    #[test]
    fn divided_difference_relations(f in poly_strategy(4, 2, 5, 2), i in 1u32..=3) {
        prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
        if i == 1 {
            prop_assert_eq!(
                f.divided_difference(1).divided_difference(3),
                f.divided_difference(3).divided_difference(1)
            );
        }
        if i <= 2 {
            let j = i + 1;
            let l = f.divided_difference(i).divided_difference(j).divided_difference(i);
            let r = f.divided_difference(j).divided_difference(i).divided_difference(j);
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn graham_closed_under_sum_and_product(a in graham_positive_strategy(5), b in graham_positive_strategy(5)) {
        prop_assert!(a.graham_positive().unwrap().positive);
        prop_assert!(b.graham_positive().unwrap().positive);
        prop_assert!((&a + &b).graham_positive().unwrap().positive);
        prop_assert!((&a * &b).graham_positive().unwrap().positive);
    }

    #[test]
    fn print_parse_roundtrip(f in poly_strategy(4, 4, 6, 3)) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(Poly::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn certificate_resums(f in graham_positive_strategy(6)) {
        let check = f.graham_positive().unwrap();
        let back = check.certificate.to_poly();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn graham_negative_examples() {
    assert!(!parse_poly("t1-t2").unwrap().graham_positive().unwrap().positive);
    assert!(!parse_poly("t1").unwrap().graham_positive().unwrap().positive);
    assert!(parse_poly("x1").unwrap().graham_positive().is_err());
    assert!(parse_poly("t3-t1").unwrap().graham_positive().unwrap().positive);
}

#[test]
fn variables_in_rename() {
    let f = parse_poly("x1*t2 + x3").unwrap();
    let g = f.rename(|v| match v {
        Var::X(i) => Var::X(i + 1),
        t => t,
    });
    assert_eq!(g, parse_poly("x2*t2 + x4").unwrap());
}
