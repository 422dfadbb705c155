mod common;

use std::collections::BTreeMap;

use common::{alphabet_strategy, poly_strategy};
use eqsym::star::*;
use eqsym::symgroup::schubert_dd;
use eqsym::*;
use proptest::prelude::*;

fn coeffs(m: &BTreeMap<IndexedForest, CertifiedCoeff>) -> BTreeMap<IndexedForest, Poly> {
    m.iter().map(|(k, v)| (k.clone(), v.coeff.clone())).collect()
}

fn letter_strategy() -> impl Strategy<Value = StarLetter> {
    (0..3u8, 1..=3u32).prop_map(|(k, i)| match k {
        0 => StarLetter::Minus(i),
        1 => StarLetter::Plus(i),
        _ => StarLetter::E(i),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative(a in alphabet_strategy(6, 3), b in alphabet_strategy(6, 3), c in alphabet_strategy(6, 3)) {
        let left = star_product(&star_product(&a, &b), &c);
        let right = star_product(&a, &star_product(&b, &c));
        prop_assert_eq!(left, right);
        prop_assert_eq!(star_product(&DepletedAlphabet::empty(), &a), a.clone());
        prop_assert_eq!(star_product(&a, &DepletedAlphabet::empty()), a);
    }

    #[test]
    fn straightening_preserves_the_operator(
        word in proptest::collection::vec(letter_strategy(), 1..=4),
        base in alphabet_strategy(5, 2),
        f in poly_strategy(4, 3, 4, 2),
    ) {
        let e = StraightExpr::new(base, vec![(Poly::one(), StarWord::new(word))]);
        let (s, stats) = straighten(&e).unwrap();
        prop_assert!(s.is_normal());
        prop_assert_eq!(stats.measure_violations, 0);
        prop_assert_eq!(s.weight().unwrap(), e.weight().unwrap().filter(|_| !s.terms.is_empty()));
        prop_assert_eq!(s.apply(&f), e.apply(&f));
    }

    #[test]
    fn e_words_depend_only_on_the_forest(
        word in proptest::collection::vec(1..=3u32, 0..=3),
        base in alphabet_strategy(5, 2),
        f in poly_strategy(4, 3, 4, 3),
    ) {
        let forest = IndexedForest::from_factorization(&word);
        let as_word = StarWord::new(word.iter().map(|&i| StarLetter::E(i)).collect());
        let canonical = StarWord::new(vec![StarLetter::Forest(forest)]);
        prop_assert_eq!(apply_star(&as_word, &base, &f), apply_star(&canonical, &base, &f));
    }
}

#[test]
fn rewrite_relations_hold_at_every_site() {
    use StarLetter::*;
    let f = parse_poly("x1^2*x2*x3 + x2^2*x4 - 3*x1*x3^2*t2 + x4^3 + x1*x2*x3*x4 + t1*x3^2").unwrap();
    for base in [vec![], vec![1], vec![2], vec![1, 3]] {
        let base = DepletedAlphabet::new(base);
        for i in 1..=3 {
            for j in 1..=4 {
                for r in [Minus(j), Plus(j)] {
                    let e = StraightExpr::new(base.clone(), vec![(Poly::one(), StarWord::new(vec![E(i), r.clone()]))]);
                    let (s, _) = straighten(&e).unwrap();
                    assert_eq!(s.apply(&f), e.apply(&f), "E{i}*{r} at {base}");
                }
            }
        }
    }
}

#[test]
fn forests_are_biorthogonal() {
    let fs = IndexedForest::up_to_size(3, 4);
    for f in &fs {
        let p = forest_poly(f);
        for g in &fs {
            let v = ev_star(&StarWord::of_forest(g), &DepletedAlphabet::empty(), &p);
            let expect = if f == g { Poly::one() } else { Poly::zero() };
            assert_eq!(v, expect, "F={f} G={g}");
        }
    }
}

#[test]
fn schubert_expansion_matches_extraction() {
    for n in 1..=4 {
        for w in Permutation::all(n) {
            let (m, st) = expand_schubert_graham(&w);
            assert_eq!(coeffs(&m), extract(&schubert_dd(&w)), "w={w}");
            assert!(m.values().all(|c| c.positive), "w={w}");
            assert_eq!(st.measure_violations, 0);
            assert_eq!(resum(&coeffs(&m)), *schubert_dd(&w));
        }
    }
}

#[test]
fn forest_products_match_extraction() {
    let fs = IndexedForest::up_to_size(2, 3);
    for a in &fs {
        for b in &fs {
            let (m, st) = multiply_forests_graham(a, b);
            let prod = &*forest_poly(a) * &*forest_poly(b);
            assert_eq!(coeffs(&m), extract(&prod), "{a} {b}");
            assert!(m.values().all(|c| c.positive), "{a} {b}");
            assert_eq!(st.measure_violations, 0);
        }
    }
}

#[test]
fn products_commute() {
    let fs = IndexedForest::up_to_size(2, 3);
    for a in &fs {
        for b in &fs {
            assert_eq!(coeffs(&multiply_forests_graham(a, b).0), coeffs(&multiply_forests_graham(b, a).0));
        }
    }
}

#[test]
fn permutation_completion() {
    assert_eq!(complete_permutation(&[3, 1]).padded(4), vec![3, 1, 2, 4]);
    assert_eq!(complete_permutation(&[]).padded(2), vec![1, 2]);
}
