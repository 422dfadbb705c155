//! The ⋆-monoid on finite sets, ⋆-composition of depleted operators,
//! coefficient extraction in the double forest basis, and straightening.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::forest::IndexedForest;
use crate::noncrossing::{canonical_long_word, canonical_words, is_noncrossing, NoncrossingPerm};
use crate::poly::{DepletedAlphabet, GrahamCertificate, Poly};
use crate::symgroup::{ajs_billey_schubert, Permutation};
use crate::vine::{ajs_billey_forest, forest_poly};

/// `A ⋆ B = {B̄_i : i ∈ A} ∪ B`.
pub fn star_product(a: &DepletedAlphabet, b: &DepletedAlphabet) -> DepletedAlphabet {
    let mut out: Vec<u32> = a.removed().iter().map(|&i| b.nth_remaining(i)).collect();
    out.extend(b.removed().iter().copied());
    DepletedAlphabet::new(out)
}

/// `{i} ⋆ B`.
pub fn star_index(i: u32, b: &DepletedAlphabet) -> DepletedAlphabet {
    let mut out: Vec<u32> = b.removed().iter().copied().collect();
    out.push(b.nth_remaining(i));
    DepletedAlphabet::new(out)
}

/// A letter of a ⋆-word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarLetter {
    Minus(u32),
    Plus(u32),
    E(u32),
    Forest(IndexedForest),
}

impl StarLetter {
    pub fn is_r(&self) -> bool {
        matches!(self, StarLetter::Minus(_) | StarLetter::Plus(_))
    }

    pub fn is_e(&self) -> bool {
        matches!(self, StarLetter::E(_) | StarLetter::Forest(_))
    }
}

impl fmt::Display for StarLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarLetter::Minus(i) => write!(f, "R-{i}"),
            StarLetter::Plus(i) => write!(f, "R+{i}"),
            StarLetter::E(i) => write!(f, "E{i}"),
            StarLetter::Forest(g) => write!(f, "E[{}]", g.factorization_string()),
        }
    }
}

/// `X_{i_1} ⋆ ⋯ ⋆ X_{i_k}`, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StarWord {
    pub letters: Vec<StarLetter>,
}

impl StarWord {
    pub fn new(letters: Vec<StarLetter>) -> Self {
        StarWord { letters }
    }

    /// The E-word of a forest's canonical factorization.
    pub fn of_forest(f: &IndexedForest) -> Self {
        StarWord::new(f.canonical_factorization().into_iter().map(StarLetter::E).collect())
    }

    /// Forest blocks replaced by their canonical factorizations.
    pub fn expanded(&self) -> Vec<StarLetter> {
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match l {
                StarLetter::Forest(g) => out.extend(g.canonical_factorization().into_iter().map(StarLetter::E)),
                other => out.push(other.clone()),
            }
        }
        out
    }

    /// ⋆-weight: the ⋆-product of the indices.
    pub fn weight(&self) -> DepletedAlphabet {
        letters_weight(&self.expanded(), &DepletedAlphabet::empty())
    }

    pub fn is_normal(&self) -> bool {
        let l = self.expanded();
        l.iter().skip_while(|x| x.is_r()).all(|x| x.is_e())
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&s.join("*"))
    }
}

fn letter_index(l: &StarLetter) -> u32 {
    match l {
        StarLetter::Minus(i) | StarLetter::Plus(i) | StarLetter::E(i) => *i,
        StarLetter::Forest(_) => unreachable!("forest blocks are expanded first"),
    }
}

/// `weight(letters) ⋆ a`, for letters without forest blocks.
pub fn letters_weight(letters: &[StarLetter], a: &DepletedAlphabet) -> DepletedAlphabet {
    letters.iter().rev().fold(a.clone(), |acc, l| star_index(letter_index(l), &acc))
}

/// `[Φ]_A f`.
pub fn apply_star(phi: &StarWord, a: &DepletedAlphabet, f: &Poly) -> Poly {
    let mut cur = a.clone();
    let mut g = f.clone();
    for l in phi.expanded().iter().rev() {
        if g.is_zero() {
            return g;
        }
        g = match l {
            StarLetter::Minus(i) => g.r_shift(*i, false, &cur),
            StarLetter::Plus(i) => g.r_shift(*i, true, &cur),
            StarLetter::E(i) => g.e_trim(*i, &cur),
            StarLetter::Forest(_) => unreachable!(),
        };
        cur = star_index(letter_index(l), &cur);
    }
    g
}

/// `[ev ⋆ Φ]_A f`.
pub fn ev_star(phi: &StarWord, a: &DepletedAlphabet, f: &Poly) -> Poly {
    let g = apply_star(phi, a, f);
    g.evaluate_depleted(&star_product(&phi.weight(), a))
}

/// Coefficients `a_F = [ev ⋆ E_F] f` of `f = Σ a_F P_F`.
pub fn extract(f: &Poly) -> BTreeMap<IndexedForest, Poly> {
    let mut out = BTreeMap::new();
    let mut word = Vec::new();
    fn rec(
        g: &Poly,
        alphabet: &DepletedAlphabet,
        bound: u32,
        word: &mut Vec<u32>,
        out: &mut BTreeMap<IndexedForest, Poly>,
    ) {
        let c = g.evaluate_depleted(alphabet);
        if !c.is_zero() {
            let mut w = word.clone();
            w.reverse();
            out.insert(IndexedForest::from_factorization(&w), c);
        }
        if g.is_x_free() {
            return;
        }
        for i in 1..=bound.min(g.max_x_index()) {
            let h = g.e_trim(i, alphabet);
            if h.is_zero() {
                continue;
            }
            word.push(i);
            rec(&h, &star_index(i, alphabet), i, word, out);
            word.pop();
        }
    }
    rec(f, &DepletedAlphabet::empty(), u32::MAX, &mut word, &mut out);
    out
}

/// `Σ a_F P_F`.
pub fn resum(coeffs: &BTreeMap<IndexedForest, Poly>) -> Poly {
    coeffs.iter().map(|(f, c)| c * &*forest_poly(f)).sum()
}

/// A ℤ[t]-combination of ⋆-words applied at a fixed base alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightExpr {
    pub base: DepletedAlphabet,
    pub terms: Vec<(Poly, Vec<StarLetter>)>,
}

impl StraightExpr {
    pub fn new(base: DepletedAlphabet, terms: Vec<(Poly, StarWord)>) -> Self {
        StraightExpr {
            base,
            terms: terms.into_iter().map(|(c, w)| (c, w.expanded())).collect(),
        }
    }

    pub fn single(word: StarWord) -> Self {
        StraightExpr::new(DepletedAlphabet::empty(), vec![(Poly::one(), word)])
    }

    /// Common ⋆-weight of the summands, if any.
    pub fn weight(&self) -> Result<Option<DepletedAlphabet>> {
        let mut w: Option<DepletedAlphabet> = None;
        for (_, t) in &self.terms {
            let tw = letters_weight(t, &DepletedAlphabet::empty());
            match &w {
                None => w = Some(tw),
                Some(prev) if *prev != tw => {
                    return Err(Error::NotStarCompatible(format!("weights {prev} and {tw} differ")));
                }
                _ => {}
            }
        }
        Ok(w)
    }

    /// `Σ c [Φ]_base f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.terms
            .iter()
            .map(|(c, w)| c * &apply_star(&StarWord::new(w.clone()), &self.base, f))
            .sum()
    }

    pub fn is_normal(&self) -> bool {
        self.terms.iter().all(|(_, w)| StarWord::new(w.clone()).is_normal())
    }
}

impl fmt::Display for StraightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                let w = StarWord::new(w.clone());
                if c.is_one() {
                    format!("[{w}]")
                } else {
                    format!("({c})[{w}]")
                }
            })
            .collect();
        f.write_str(&s.join(" + "))
    }
}

/// `(#R letters, Σ R indices, #(E before R) pairs)`.
pub fn measure(letters: &[StarLetter]) -> (usize, u32, usize) {
    let mut r = 0;
    let mut sum = 0;
    let mut inv = 0;
    let mut es = 0;
    for l in letters {
        if l.is_r() {
            r += 1;
            sum += letter_index(l);
            inv += es;
        } else {
            es += 1;
        }
    }
    (r, sum, inv)
}

/// Run data for [`straighten`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StraightenStats {
    pub steps: usize,
    /// Rewrites whose outputs failed to drop the measure (expected 0).
    pub measure_violations: usize,
}

/// One rewrite of `E_a ⋆ R` at scalar alphabet `s`.
fn rewrite_pair(e: u32, r: &StarLetter, s: &DepletedAlphabet) -> Vec<(Poly, Vec<StarLetter>)> {
    use StarLetter::*;
    let scalar = |i: u32| Poly::t_diff(s.nth_remaining(i + 1), s.nth_remaining(i));
    match *r {
        Minus(j) if j <= e => vec![(Poly::one(), vec![Minus(j), E(e + 1)])],
        Minus(j) if j >= e + 2 => vec![(Poly::one(), vec![Minus(j - 1), E(e)])],
        Minus(_) => vec![
            (Poly::one(), vec![Plus(e), E(e)]),
            (Poly::one(), vec![Minus(e), E(e + 1)]),
            (scalar(e), vec![E(e), E(e + 1)]),
        ],
        Plus(j) if j < e => vec![(Poly::one(), vec![Plus(j), E(e + 1)])],
        Plus(j) if j >= e + 2 => vec![(Poly::one(), vec![Plus(j - 1), E(e)])],
        Plus(j) if j == e + 1 => vec![(Poly::one(), vec![Plus(e), E(e)])],
        Plus(_) => vec![
            (Poly::one(), vec![Plus(e), E(e)]),
            (Poly::one(), vec![Minus(e), E(e + 1)]),
            (scalar(e), vec![E(e), E(e)]),
        ],
        _ => unreachable!("right letter of a rewrite site is an R"),
    }
}

/// Moves every E letter to the right of every R letter by rewriting the
/// leftmost `E ⋆ R` pair of each summand; like terms are merged.
pub fn straighten(e: &StraightExpr) -> Result<(StraightExpr, StraightenStats)> {
    e.weight()?;
    let mut stats = StraightenStats::default();
    let mut done: BTreeMap<Vec<StarLetter>, Poly> = BTreeMap::new();
    let mut work: Vec<(Poly, Vec<StarLetter>)> = e.terms.iter().rev().cloned().collect();
    while let Some((c, w)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        let site = (0..w.len().saturating_sub(1)).find(|&k| w[k].is_e() && w[k + 1].is_r());
        let Some(k) = site else {
            *done.entry(w).or_insert_with(Poly::zero) += &c;
            continue;
        };
        stats.steps += 1;
        let s = letters_weight(&w[k + 2..], &e.base);
        let before = measure(&w);
        let produced = rewrite_pair(letter_index(&w[k]), &w[k + 1], &s);
        for (sc, mid) in produced.into_iter().rev() {
            let mut nw = w[..k].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[k + 2..]);
            if measure(&nw) >= before {
                stats.measure_violations += 1;
            }
            work.push((&c * &sc, nw));
        }
    }
    let terms = done.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect();
    Ok((StraightExpr { base: e.base.clone(), terms }, stats))
}

/// Splits a normal-form word into its R prefix and the forest of its E part.
pub fn split_normal(w: &[StarLetter]) -> (Vec<StarLetter>, IndexedForest) {
    let k = w.iter().position(|l| l.is_e()).unwrap_or(w.len());
    let ek: Vec<u32> = w[k..].iter().map(letter_index).collect();
    (w[..k].to_vec(), IndexedForest::from_factorization(&ek))
}

/// The injection `m ↦ π(m)` with `[ev ⋆ Rword]_A x_m = t_{π(m)}`.
pub fn r_word_image(word: &[StarLetter], a: &DepletedAlphabet, m: u32) -> u32 {
    let Some((last, prefix)) = word.split_last() else {
        let w = a.clone();
        return w.nth_remaining(m);
    };
    let j = letter_index(last);
    let a2 = star_index(j, a);
    match last {
        StarLetter::Minus(_) => {
            if m < j {
                r_word_image(prefix, &a2, m)
            } else if m == j {
                a.nth_remaining(j)
            } else {
                r_word_image(prefix, &a2, m - 1)
            }
        }
        StarLetter::Plus(_) => {
            if m <= j {
                r_word_image(prefix, &a2, m)
            } else if m == j + 1 {
                a.nth_remaining(j)
            } else {
                r_word_image(prefix, &a2, m - 1)
            }
        }
        _ => panic!("R-word expected"),
    }
}

/// A permutation agreeing with `m ↦ values[m-1]` on `1..=values.len()`,
/// completed increasingly.
pub fn complete_permutation(values: &[u32]) -> Permutation {
    let top = values.iter().copied().max().unwrap_or(0).max(values.len() as u32);
    let mut rest: Vec<u32> = (1..=top).filter(|v| !values.contains(v)).collect();
    rest.sort_unstable();
    let mut line = values.to_vec();
    line.extend(rest);
    Permutation::new(line).expect("injective values")
}

/// A coefficient with its Graham certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedCoeff {
    pub coeff: Poly,
    pub positive: bool,
    pub certificate: GrahamCertificate,
}

impl CertifiedCoeff {
    fn new(coeff: Poly) -> Self {
        let g = coeff.graham_positive().expect("coefficients are x-free");
        CertifiedCoeff {
            coeff,
            positive: g.positive,
            certificate: g.certificate,
        }
    }
}

/// Extra run data for the Graham algorithms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrahamStats {
    pub straighten_steps: usize,
    pub measure_violations: usize,
    /// Evaluations at permutations outside the noncrossing set, done directly.
    pub direct_evaluations: usize,
}

fn e_word(k: &IndexedForest) -> Vec<StarLetter> {
    StarWord::of_forest(k).letters
}

/// Each `a^w_F` of `S_w = Σ a^w_F P_F`, computed by peeling descents,
/// straightening and AJS–Billey.
pub fn expand_schubert_graham(w: &Permutation) -> (BTreeMap<IndexedForest, CertifiedCoeff>, GrahamStats) {
    let mut stats = GrahamStats::default();
    let len = w.length();
    let maxdes = w.descents().last().copied().unwrap_or(0) as usize;
    let mut out = BTreeMap::new();
    for f in IndexedForest::up_to_size(len, maxdes) {
        let c = schubert_coefficient(w, &f, &mut stats);
        if !c.is_zero() {
            out.insert(f, CertifiedCoeff::new(c));
        }
    }
    (out, stats)
}

/// `[ev ⋆ E_F] S_w` along the peeling algorithm.
pub fn schubert_coefficient(w: &Permutation, f: &IndexedForest, stats: &mut GrahamStats) -> Poly {
    let mut total = Poly::zero();
    let mut work: Vec<(Poly, Vec<StarLetter>, IndexedForest, Permutation)> =
        vec![(Poly::one(), Vec::new(), f.clone(), w.clone())];
    while let Some((c, rw, k, v)) = work.pop() {
        if k.is_empty() {
            let nx = v.n().max(1);
            let vals: Vec<u32> = (1..=nx).map(|m| r_word_image(&rw, &DepletedAlphabet::empty(), m)).collect();
            let sigma = complete_permutation(&vals);
            let omega = sigma.lex_min_reduced_word();
            let ev = ajs_billey_schubert(&v, &sigma, &omega).expect("reduced word");
            total += &(&c * &ev);
            continue;
        }
        let i = k.max_qdes();
        if !v.has_descent(i) {
            continue;
        }
        let kq = k.trim(i).expect("quasi-descent");
        let mut word = rw.clone();
        word.extend(e_word(&kq));
        word.push(StarLetter::Minus(i));
        let expr = StraightExpr {
            base: DepletedAlphabet::empty(),
            terms: vec![(Poly::one(), word)],
        };
        let (st, s) = straighten(&expr).expect("single term");
        stats.straighten_steps += s.steps;
        stats.measure_violations += s.measure_violations;
        let vs = v.mul_s_right(i);
        for (sc, nw) in st.terms {
            let (r2, k2) = split_normal(&nw);
            work.push((&c * &sc, r2, k2, vs.clone()));
        }
    }
    total
}

/// `ev_τ P_G`, through AJS–Billey when `τ` is noncrossing.
fn eval_forest_at(g: &IndexedForest, values: &[u32], stats: &mut GrahamStats) -> Poly {
    if g.is_empty() {
        return Poly::one();
    }
    let tau = complete_permutation(values);
    if is_noncrossing(&tau) {
        let n = tau.n().max(2);
        let sigma = NoncrossingPerm::new(tau, n).expect("noncrossing");
        let lw = canonical_long_word(n);
        let (ncrmin, _, _) = canonical_words(&sigma);
        return ajs_billey_forest(g, &sigma, &ncrmin.values(&lw)).expect("canonical word");
    }
    stats.direct_evaluations += 1;
    forest_poly(g).evaluate_perm(tau.one_line())
}

/// `[ev ⋆ E_K ⋆ R^±_i] P_G` by straightening.
fn shifted_coefficient(k: &IndexedForest, plus: bool, i: u32, g: &IndexedForest, stats: &mut GrahamStats) -> Poly {
    let mut word = e_word(k);
    word.push(if plus { StarLetter::Plus(i) } else { StarLetter::Minus(i) });
    let expr = StraightExpr {
        base: DepletedAlphabet::empty(),
        terms: vec![(Poly::one(), word)],
    };
    let (st, s) = straighten(&expr).expect("single term");
    stats.straighten_steps += s.steps;
    stats.measure_violations += s.measure_violations;
    let mut total = Poly::zero();
    for (sc, nw) in st.terms {
        let (rw, k2) = split_normal(&nw);
        let Some(rest) = g.right_quotient(&k2) else {
            continue;
        };
        let l = StarWord::of_forest(&k2).weight();
        let nx = rest.max_qdes().max(1);
        // Images avoid L, so they are relabeled into N \ L.
        let vals: Vec<u32> = (1..=nx)
            .map(|m| {
                let v = r_word_image(&rw, &l, m);
                v - l.removed().iter().filter(|&&a| a < v).count() as u32
            })
            .collect();
        let ev = eval_forest_at(&rest, &vals, stats).relabel_t(&l);
        total += &(&sc * &ev);
    }
    total
}

/// Structure constants `c^H_{F,G}` of `P_F P_G = Σ c^H_{F,G} P_H`, by
/// the Leibniz rule at `i = max qdes(H)`.
pub struct ForestProduct {
    memo: HashMap<(IndexedForest, IndexedForest, IndexedForest), Poly>,
    shifted: HashMap<(IndexedForest, bool, u32, IndexedForest), Poly>,
    pub stats: GrahamStats,
}

impl Default for ForestProduct {
    fn default() -> Self {
        Self::new()
    }
}

impl ForestProduct {
    pub fn new() -> Self {
        ForestProduct {
            memo: HashMap::new(),
            shifted: HashMap::new(),
            stats: GrahamStats::default(),
        }
    }

    fn shifted(&mut self, k: &IndexedForest, plus: bool, i: u32, g: &IndexedForest) -> Poly {
        let key = (k.clone(), plus, i, g.clone());
        if let Some(p) = self.shifted.get(&key) {
            return p.clone();
        }
        let p = shifted_coefficient(k, plus, i, g, &mut self.stats);
        self.shifted.insert(key, p.clone());
        p
    }

    /// Forests `K` that can occur in the expansion of `R^±_i P_G`.
    fn shift_support(g: &IndexedForest) -> Vec<IndexedForest> {
        IndexedForest::up_to_size(g.size(), g.max_qdes() as usize)
    }

    pub fn coefficient(&mut self, h: &IndexedForest, f: &IndexedForest, g: &IndexedForest) -> Poly {
        if h.is_empty() {
            return if f.is_empty() && g.is_empty() { Poly::one() } else { Poly::zero() };
        }
        if h.size() > f.size() + g.size() {
            return Poly::zero();
        }
        let key = (h.clone(), f.clone(), g.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let i = h.max_qdes();
        let hq = h.trim(i).expect("quasi-descent");
        let hat = DepletedAlphabet::new([i]);
        let mut total = Poly::zero();
        if f.qdes().contains(&i) {
            let fq = f.trim(i).expect("quasi-descent");
            for k in Self::shift_support(g) {
                let b = self.shifted(&k, false, i, g);
                if b.is_zero() {
                    continue;
                }
                let c = self.coefficient(&hq, &fq, &k);
                if !c.is_zero() {
                    total += &(&b * &c.relabel_t(&hat));
                }
            }
        }
        if g.qdes().contains(&i) {
            let gq = g.trim(i).expect("quasi-descent");
            for k in Self::shift_support(f) {
                let b = self.shifted(&k, true, i, f);
                if b.is_zero() {
                    continue;
                }
                let c = self.coefficient(&hq, &k, &gq);
                if !c.is_zero() {
                    total += &(&b * &c.relabel_t(&hat));
                }
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All nonzero `c^H_{F,G}` with certificates.
pub fn multiply_forests_graham(f: &IndexedForest, g: &IndexedForest) -> (BTreeMap<IndexedForest, CertifiedCoeff>, GrahamStats) {
    let mut fp = ForestProduct::new();
    let len = f.max_qdes().max(g.max_qdes()) as usize;
    let mut out = BTreeMap::new();
    for h in IndexedForest::up_to_size(f.size() + g.size(), len) {
        let c = fp.coefficient(&h, f, g);
        if !c.is_zero() {
            out.insert(h, CertifiedCoeff::new(c));
        }
    }
    (out, fp.stats)
}
