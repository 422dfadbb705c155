#![allow(dead_code)]

use eqsym::poly::Monomial;
use eqsym::{DepletedAlphabet, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Random polynomials in x1..x{nx}, t1..t{nt} with small exponents.
pub fn poly_strategy(nx: u32, nt: u32, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
    let term = (
        -3i64..=3,
        proptest::collection::vec(0..=max_exp, nx as usize),
        proptest::collection::vec(0..=max_exp, nt as usize),
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(c, xs, ts)| {
            let m = Monomial::from_exponents(
                xs.into_iter().enumerate().map(|(i, e)| (i as u32 + 1, e)),
                ts.into_iter().enumerate().map(|(i, e)| (i as u32 + 1, e)),
            );
            (m, BigInt::from(c))
        }))
    })
}

pub fn alphabet_strategy(max: u32, len: usize) -> impl Strategy<Value = DepletedAlphabet> {
    proptest::collection::btree_set(1..=max, 0..=len).prop_map(DepletedAlphabet::new)
}

/// Random Graham-positive polynomials: sums of products of `t_b - t_a`, `b > a`.
pub fn graham_positive_strategy(max_t: u32) -> impl Strategy<Value = Poly> {
    let factor = (1..max_t, 1..max_t).prop_map(move |(a, d)| {
        let b = (a + d).min(max_t);
        let a = a.min(b - 1).max(1);
        Poly::t_diff(b, a)
    });
    let term = (1i64..=3, proptest::collection::vec(factor, 0..=2))
        .prop_map(|(c, fs)| fs.into_iter().fold(Poly::constant(c), |acc, f| &acc * &f));
    proptest::collection::vec(term, 0..=3).prop_map(|ts| ts.into_iter().sum())
}
