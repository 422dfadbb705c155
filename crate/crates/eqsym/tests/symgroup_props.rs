use eqsym::symgroup::*;
use eqsym::vine::schubert_poly;
use eqsym::{Permutation, Poly};
use num_bigint::BigUint;

#[test]
fn three_schubert_constructions_agree() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let dd = schubert_dd(&w);
            assert_eq!(schubert_pipedream(&w), *dd, "w={w}");
            assert_eq!(schubert_poly(&w), *dd, "w={w}");
        }
    }
}

#[test]
fn divided_differences_on_schuberts() {
    for w in Permutation::all(4) {
        let s = schubert_dd(&w);
        for i in 1..=4 {
            let d = s.divided_difference(i);
            if w.has_descent(i) {
                assert_eq!(d, *schubert_dd(&w.mul_s_right(i)), "w={w} i={i}");
            } else {
                assert!(d.is_zero(), "w={w} i={i}");
            }
        }
    }
}

#[test]
fn evaluation_vanishing_is_bruhat() {
    let all = Permutation::all(4);
    for w in &all {
        let s = schubert_dd(w);
        for sigma in &all {
            let ev = s.evaluate_perm(&sigma.padded(4));
            assert_eq!(ev.is_zero(), !w.bruhat_leq(sigma), "w={w} sigma={sigma}");
            let omega = sigma.lex_min_reduced_word();
            assert_eq!(ajs_billey_schubert(w, sigma, &omega).unwrap(), ev);
        }
    }
}

#[test]
fn self_evaluation_product() {
    for w in Permutation::all(4) {
        let expect: Poly = w
            .inversions()
            .into_iter()
            .map(|(i, j)| Poly::t_diff(w.apply(i), w.apply(j)))
            .product();
        assert_eq!(schubert_dd(&w).evaluate_perm(&w.padded(4)), expect, "w={w}");
    }
}

#[test]
fn reduced_word_counts() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let words = reduced_words(&w);
            assert_eq!(BigUint::from(words.len()), count_reduced_words(&w));
            for r in &words {
                assert!(w.is_reduced_word(r));
                assert_eq!(Permutation::from_word(r), w);
            }
        }
    }
    assert_eq!(count_reduced_words(&Permutation::longest(4)), BigUint::from(16u32));
}

#[test]
fn descent_peeling_along_any_word() {
    for w in Permutation::all(4) {
        let u = w.inverse().compose(&Permutation::longest(4));
        for omega in reduced_words(&u) {
            assert_eq!(schubert_dd_along(&w, 4, &omega).unwrap(), *schubert_dd(&w), "w={w} {omega:?}");
        }
    }
}
