//! Acceptance criteria: one PASS/FAIL line per criterion.
//! All comparisons are exact integer polynomial equality.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use eqsym::noncrossing::{bruhat_leq_nc, canonical_long_word, canonical_words, count_nc_reduced_words, for_to_nc, nc_reduced_words, nc_to_for, Heap};
use eqsym::poly::GrahamCheck;
use eqsym::star::{expand_schubert_graham, extract};
use eqsym::symgroup::{count_reduced_words, schubert_dd, schubert_pipedream};
use eqsym::tables::{check_table1, check_table2, check_table3, table2, table3, RowCheck};
use eqsym::vine::{ajs_billey_forest, double_fundamental, own_perm_eval};
use eqsym::*;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 20261014;
const CORPUS: usize = 200;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let ok = o.ok && took <= limit;
    println!(
        "{} criterion {n}: {name}: {} ({:.2}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        o.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn rows(checks: &[RowCheck]) -> Outcome {
    let good = checks.iter().filter(|c| c.ok).count();
    let bad: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.label.as_str()).collect();
    let mut d = format!("{good}/{} rows exact", checks.len());
    if !bad.is_empty() {
        d += &format!(", mismatched {bad:?}");
    }
    outcome(bad.is_empty(), d)
}

fn positive(c: &Poly) -> bool {
    let GrahamCheck { positive, certificate } = c.graham_positive().unwrap();
    positive && certificate.to_poly() == *c
}

fn criterion1() -> Outcome {
    rows(&check_table1().unwrap())
}

fn criterion2() -> Outcome {
    let graham = check_table2().unwrap();
    let mut extracted = 0;
    let t2 = table2().unwrap();
    for r in &t2 {
        if extract(&schubert_dd(&r.w)) == r.expected {
            extracted += 1;
        }
    }
    let o = rows(&graham);
    outcome(
        o.ok && extracted == t2.len(),
        format!("{} by peeling, {extracted}/{} by extraction", o.detail, t2.len()),
    )
}

fn criterion3() -> Outcome {
    rows(&check_table3().unwrap())
}

fn criterion4() -> Outcome {
    let w: Permutation = "82154763".parse().unwrap();
    let red = count_reduced_words(&w);
    let s = NoncrossingPerm::from_perm(w).unwrap();
    let rednc = count_nc_reduced_words(&s);
    let lw = canonical_long_word(8);
    let (ncrmin, _, _) = canonical_words(&s);
    let heap = Heap::new(&ncrmin.values(&lw)).unwrap().linear_extension_count();
    outcome(
        red == BigUint::from(183365u32) && rednc == BigUint::from(336u32) && heap == rednc,
        format!("|Red| = {red}, |RedNC| = {rednc}, heap extensions = {heap}"),
    )
}

fn oracle_triangle(n: u32) -> usize {
    Permutation::all(n)
        .iter()
        .filter(|w| {
            let dd = schubert_dd(w);
            schubert_poly(w) == *dd && schubert_pipedream(w) == *dd
        })
        .count()
}

fn criterion5() -> Outcome {
    let s4 = oracle_triangle(4);
    let s5 = oracle_triangle(5);
    outcome(s4 == 24 && s5 == 120, format!("S4 {s4}/24, S5 {s5}/120"))
}

fn criterion6() -> Outcome {
    let empty = DepletedAlphabet::empty();
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in IndexedForest::up_to_size(4, 5) {
        let p = forest_poly(&f);
        let norm = p.evaluate_perm(&[]).is_zero() != f.is_empty();
        let mut rec = true;
        for i in 1..=f.max_support() + 1 {
            let e = p.e_trim(i, &empty);
            rec &= if f.qdes().contains(&i) {
                e == forest_poly(&f.trim(i).unwrap()).relabel_t(&DepletedAlphabet::new([i]))
            } else {
                e.is_zero()
            };
        }
        if norm && rec {
            checked += 1;
        } else {
            bad.push(f.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{checked} forests, failures {bad:?}"))
}

fn criterion7() -> Outcome {
    let ncs = NoncrossingPerm::all(4);
    let mut evals = 0;
    let mut nonzero = 0;
    for k in 1..=4 {
        for c in PaddedComposition::all(4, k) {
            let p = double_fundamental(&c);
            for s in &ncs {
                evals += 1;
                if !p.evaluate_perm(&s.perm().padded(4)).is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    outcome(nonzero == 0 && ncs.len() == 14, format!("{evals} evaluations over {} permutations, {nonzero} nonzero", ncs.len()))
}

fn criterion8() -> Outcome {
    let mut checks = 0;
    let mut bad = 0;
    for f in IndexedForest::supported_on(4) {
        for s in NoncrossingPerm::all(4) {
            let direct = forest_poly(&f).evaluate_perm(&s.perm().padded(4));
            for w in nc_reduced_words(&s) {
                checks += 1;
                if ajs_billey_forest(&f, &s, &w).unwrap() != direct {
                    bad += 1;
                }
            }
        }
    }
    outcome(bad == 0, format!("{checks} (forest, permutation, word) triples, {bad} mismatches"))
}

fn criterion9() -> Outcome {
    let nc7 = NoncrossingPerm::all(7);
    let round = nc7.iter().filter(|s| for_to_nc(&nc_to_for(s), 7).unwrap() == **s).count();
    let mut tri = 0;
    let mut tri_total = 0;
    for f in IndexedForest::supported_on(4) {
        let tau = for_to_nc(&f, 4).unwrap();
        for s in NoncrossingPerm::all(4) {
            tri_total += 1;
            let zero = forest_poly(&f).evaluate_perm(&s.perm().padded(4)).is_zero();
            if zero != bruhat_leq_nc(&tau, &s).unwrap() {
                tri += 1;
            }
        }
    }
    let f5 = IndexedForest::supported_on(5);
    let own = f5
        .iter()
        .filter(|f| {
            let n = f.max_support().max(1);
            let s = for_to_nc(f, n).unwrap();
            own_perm_eval(f) == forest_poly(f).evaluate_perm(&s.perm().padded(n))
        })
        .count();
    outcome(
        round == nc7.len() && tri == tri_total && own == f5.len(),
        format!(
            "round trip {round}/{}, triangularity {tri}/{tri_total}, own-permutation {own}/{}",
            nc7.len(),
            f5.len()
        ),
    )
}

fn random_graham_positive(rng: &mut StdRng, degree: u32) -> Poly {
    let mut c = Poly::constant(rng.gen_range(1..=3));
    for _ in 0..degree {
        let a = rng.gen_range(1..=4);
        let b = rng.gen_range(a + 1..=6);
        c = &c * &Poly::t_diff(b, a);
    }
    c
}

fn criterion10() -> Outcome {
    let mut coeffs = Vec::new();
    for r in table2().unwrap() {
        coeffs.extend(expand_schubert_graham(&r.w).0.into_values().map(|c| c.coeff));
    }
    let mut fp = eqsym::star::ForestProduct::new();
    for r in table3().unwrap() {
        coeffs.extend(eqsym::tables::fundamental_product_lower(&mut fp, &r.c, &r.d).into_values());
    }
    let table_ok = coeffs.iter().filter(|c| positive(c)).count();

    let mut rng = StdRng::seed_from_u64(SEED);
    let forests = IndexedForest::up_to_size(4, 4);
    let mut round = 0;
    for _ in 0..CORPUS {
        let mut target: BTreeMap<IndexedForest, Poly> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let f = forests[rng.gen_range(0..forests.len())].clone();
            let d = rng.gen_range(0..=4 - f.size());
            *target.entry(f).or_insert_with(Poly::zero) += &random_graham_positive(&mut rng, d);
        }
        let f: Poly = target.iter().map(|(k, c)| c * &*forest_poly(k)).sum();
        let got = extract(&f);
        if got == target && got.values().all(positive) && f.degree().unwrap_or(0) <= 4 {
            round += 1;
        }
    }
    outcome(
        table_ok == coeffs.len() && round == CORPUS,
        format!("table coefficients {table_ok}/{} certified, corpus {round}/{CORPUS} round trips", coeffs.len()),
    )
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        run(1, "forest polynomial table", s(5), criterion1),
        run(2, "Schubert expansion table", s(30), criterion2),
        run(3, "fundamental product table", s(60), criterion3),
        run(4, "reduced word counts", s(60), criterion4),
        run(5, "Schubert oracle triangle", s(10), criterion5),
        run(6, "defining recursion", s(30), criterion6),
        run(7, "fundamental vanishing", s(10), criterion7),
        run(8, "evaluation along noncrossing words", s(60), criterion8),
        run(9, "bijection and triangularity", s(60), criterion9),
        run(10, "Graham positivity", s(60), criterion10),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
