use std::collections::BTreeSet;

use eqsym::noncrossing::*;
use eqsym::vine::LongWord;
use eqsym::{IndexedForest, NoncrossingPerm, Permutation};
use num_bigint::BigUint;

const CATALAN: [usize; 8] = [1, 1, 2, 5, 14, 42, 132, 429];

#[test]
fn catalan_counts() {
    for n in 1..=7u32 {
        assert_eq!(NoncrossingPerm::all(n).len(), CATALAN[n as usize]);
    }
    let listed: BTreeSet<String> = "1234 1324 2134 3124 3214 1243 2143 1423 1432 4123 4132 4213 4231 4321"
        .split(' ')
        .map(String::from)
        .collect();
    let got: BTreeSet<String> = NoncrossingPerm::all(4).iter().map(|s| s.to_string()).collect();
    assert_eq!(got, listed);
}

fn commutation_closure(start: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::from([start.to_vec()]);
    let mut stack = vec![start.to_vec()];
    while let Some(w) = stack.pop() {
        for k in 0..w.len().saturating_sub(1) {
            if w[k].abs_diff(w[k + 1]) >= 2 {
                let mut v = w.clone();
                v.swap(k, k + 1);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    seen
}

#[test]
fn nc_reduced_words_form_a_commutation_class() {
    for sigma in NoncrossingPerm::all(5) {
        let lw = canonical_long_word(5);
        let (ncrmin, _, _) = canonical_words(&sigma);
        let word = ncrmin.values(&lw);
        assert!(is_nc_reduced_word(&sigma, &word), "{sigma}");
        let words: BTreeSet<Vec<u32>> = nc_reduced_words(&sigma).into_iter().collect();
        assert_eq!(commutation_closure(&word), words, "{sigma}");
        let heap = Heap::new(&word).unwrap();
        assert_eq!(heap.linear_extension_count(), BigUint::from(words.len()));
        assert_eq!(heap.linear_extension_words().into_iter().collect::<BTreeSet<_>>(), words);
        assert_eq!(count_nc_reduced_words(&sigma), BigUint::from(words.len()));
    }
}

#[test]
fn forest_bijection() {
    for n in 1..=7u32 {
        for f in IndexedForest::supported_on(n) {
            let s = for_to_nc(&f, n).unwrap();
            assert_eq!(nc_to_for(&s), f);
        }
        for s in NoncrossingPerm::all(n) {
            assert_eq!(for_to_nc(&nc_to_for(&s), n).unwrap(), s);
        }
    }
}

#[test]
fn fixed_point_criterion_for_staying_noncrossing() {
    for n in 2..=6u32 {
        for s in NoncrossingPerm::all(n) {
            for i in 1..n {
                let stays = is_noncrossing(&s.perm().mul_s_right(i));
                assert_eq!(stays, s.apply(i) == i || s.apply(i + 1) == i, "{s} i={i}");
            }
        }
    }
}

#[test]
fn nc_descents_structure() {
    for n in 2..=6u32 {
        for s in NoncrossingPerm::all(n) {
            let expect: BTreeSet<u32> = (1..n)
                .filter(|&i| s.block_of(i)[0] == i && s.block_of(i + 1)[0] != i + 1)
                .collect();
            assert_eq!(nc_descents(&s), expect, "{s}");
        }
    }
}

#[test]
fn inv_nc_structure() {
    for n in 1..=6u32 {
        for s in NoncrossingPerm::all(n) {
            let mut expect = BTreeSet::new();
            for i in 1..=n {
                if s.block_of(i)[0] != i {
                    continue;
                }
                for j in i + 1..=n {
                    if s.block_of(i).contains(&j) {
                        expect.insert((i, j));
                    }
                }
                if let Some(j) = (i + 1..=n).find(|&j| s.apply(j) < i) {
                    expect.insert((i, j));
                }
            }
            assert_eq!(inv_nc(&s), expect, "{s}");
            assert_eq!(nc_to_for(&s).spread_set(), expect, "{s}");
        }
    }
}

#[test]
fn vert_codes_give_bruhat_order() {
    let all = NoncrossingPerm::all(5);
    for a in &all {
        for b in &all {
            assert_eq!(bruhat_leq_nc(a, b).unwrap(), a.perm().bruhat_leq(b.perm()), "{a} {b}");
        }
    }
    assert!(bruhat_leq_nc(&all[0], &NoncrossingPerm::identity(4)).is_err());
}

#[test]
fn equivalence_classes_for_four() {
    let classes = nc_equivalence_classes(4, DEFAULT_NMAX).unwrap();
    let ncs: Vec<Permutation> = NoncrossingPerm::all(4).into_iter().map(|s| s.perm().clone()).collect();
    let mut first = classes[0].clone();
    first.sort();
    let mut ncs_sorted = ncs.clone();
    ncs_sorted.sort();
    assert_eq!(first, ncs_sorted);
    let rest: BTreeSet<BTreeSet<String>> = classes[1..]
        .iter()
        .map(|c| c.iter().map(|p| p.padded(4).iter().map(|d| d.to_string()).collect::<String>()).collect())
        .collect();
    let listed: BTreeSet<BTreeSet<String>> = ["1342 3142", "2314", "2341", "2431 2413", "3412", "3421 3241", "4312"]
        .iter()
        .map(|c| c.split(' ').map(String::from).collect())
        .collect();
    assert_eq!(rest, listed);
    for n in 1..=6 {
        let c = nc_equivalence_classes(n, DEFAULT_NMAX).unwrap();
        assert_eq!(c[0].len(), CATALAN[n as usize]);
    }
}

#[test]
fn depletion_of_words() {
    for s in NoncrossingPerm::all(5) {
        for a in nc_descents(&s) {
            let d = deplete(&s, a).unwrap();
            for w in nc_reduced_words(&s) {
                let dw = deplete_word(&w, a).unwrap();
                assert!(is_nc_reduced_word(&d, &dw), "{s} a={a} {w:?}");
            }
        }
    }
}

#[test]
fn canonical_words_are_reduced() {
    for n in 2..=6u32 {
        let lw = LongWord::new(n - 1);
        for s in NoncrossingPerm::all(n) {
            let (ncrmin, sylcont, sylmin) = canonical_words(&s);
            assert!(is_nc_reduced_word(&s, &ncrmin.values(&lw)), "{s}");
            assert_eq!(ncrmin.len() as u32, s.perm().length());
            assert!(sylmin.positions().iter().all(|p| ncrmin.contains(*p) && sylcont.contains(*p)));
            let v: u32 = vert_code(&s).iter().sum();
            assert_eq!(v, s.perm().length(), "{s}");
        }
    }
}

#[test]
fn counting_claims() {
    let w: Permutation = "82154763".parse().unwrap();
    assert_eq!(eqsym::symgroup::count_reduced_words(&w), BigUint::from(183365u32));
    let s = NoncrossingPerm::from_perm(w).unwrap();
    assert_eq!(count_nc_reduced_words(&s), BigUint::from(336u32));
    let lw = canonical_long_word(8);
    let (ncrmin, _, _) = canonical_words(&s);
    assert_eq!(Heap::new(&ncrmin.values(&lw)).unwrap().linear_extension_count(), BigUint::from(336u32));
}
