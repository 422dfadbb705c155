//! Finite permutations, reduced words, Bruhat order and the divided-difference
//! and pipe-dream constructions of double Schubert polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// A permutation of `[n]` in one-line notation, stored with minimal `n`
/// (trailing fixed points removed). Composition is `(στ)(i) = σ(τ(i))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    pub fn new(one_line: impl Into<Vec<u32>>) -> Result<Self> {
        let v = one_line.into();
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &a in &v {
            if a == 0 || a as usize > n || seen[a as usize] {
                return Err(Error::InvalidPermutation(format!("{v:?}")));
            }
            seen[a as usize] = true;
        }
        Ok(Permutation::from_vec_unchecked(v))
    }

    fn from_vec_unchecked(mut v: Vec<u32>) -> Self {
        while v.last().copied() == Some(v.len() as u32) {
            v.pop();
        }
        Permutation { one_line: v }
    }

    /// The simple transposition `s_i`.
    pub fn s(i: u32) -> Self {
        let mut v: Vec<u32> = (1..=i + 1).collect();
        v.swap((i - 1) as usize, i as usize);
        Permutation::from_vec_unchecked(v)
    }

    /// The longest element of `S_n`.
    pub fn longest(n: u32) -> Self {
        Permutation::from_vec_unchecked((1..=n).rev().collect())
    }

    /// `s_{a1} s_{a2} ... s_{ak}`.
    pub fn from_word(word: &[u32]) -> Self {
        let n = word.iter().copied().max().map(|m| m + 1).unwrap_or(0);
        let mut v: Vec<u32> = (1..=n).collect();
        for &a in word {
            v.swap((a - 1) as usize, a as usize);
        }
        Permutation::from_vec_unchecked(v)
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// Minimal `n` with the permutation in `S_n`.
    pub fn n(&self) -> u32 {
        self.one_line.len() as u32
    }

    /// One-line notation padded to length `n`.
    pub fn padded(&self, n: u32) -> Vec<u32> {
        let mut v = self.one_line.clone();
        for k in v.len() as u32..n {
            v.push(k + 1);
        }
        v
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.one_line.get((i - 1) as usize).copied().unwrap_or(i)
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.n().max(other.n());
        Permutation::from_vec_unchecked((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.one_line.len()];
        for (k, &a) in self.one_line.iter().enumerate() {
            v[(a - 1) as usize] = k as u32 + 1;
        }
        Permutation::from_vec_unchecked(v)
    }

    /// `w s_i`: swaps positions `i, i+1`.
    pub fn mul_s_right(&self, i: u32) -> Permutation {
        let mut v = self.padded(self.n().max(i + 1));
        v.swap((i - 1) as usize, i as usize);
        Permutation::from_vec_unchecked(v)
    }

    /// `s_i w`: swaps values `i, i+1`.
    pub fn mul_s_left(&self, i: u32) -> Permutation {
        let v = self
            .padded(self.n().max(i + 1))
            .into_iter()
            .map(|a| {
                if a == i {
                    i + 1
                } else if a == i + 1 {
                    i
                } else {
                    a
                }
            })
            .collect();
        Permutation::from_vec_unchecked(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        let v = &self.one_line;
        let mut l = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right descents `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<u32> {
        (1..self.n()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    pub fn has_descent(&self, i: u32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// Left descents `{i : w^{-1}(i) > w^{-1}(i+1)}`.
    pub fn left_descents(&self) -> Vec<u32> {
        self.inverse().descents()
    }

    /// Inversion positions `{(i,j) : i<j, w(i) > w(j)}`.
    pub fn inversions(&self) -> Vec<(u32, u32)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_reduced_word(&self, word: &[u32]) -> bool {
        word.iter().all(|&a| a > 0)
            && word.len() as u32 == self.length()
            && Permutation::from_word(word) == *self
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        let n = self.n().max(w.n());
        let u = self.padded(n);
        let w = w.padded(n);
        for i in 1..=n as usize {
            for j in 1..=n {
                let ru = u[..i].iter().filter(|&&a| a >= j).count();
                let rw = w[..i].iter().filter(|&&a| a >= j).count();
                if ru > rw {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically smallest reduced word.
    pub fn lex_min_reduced_word(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut v = self.clone();
        while !v.is_identity() {
            let i = v.left_descents()[0];
            out.push(i);
            v = v.mul_s_left(i);
        }
        out
    }

    /// All permutations of `[n]`, in lexicographic order of one-line notation.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        let mut used = vec![false; n as usize + 1];
        fn rec(n: u32, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() as u32 == n {
                out.push(Permutation::from_vec_unchecked(cur.clone()));
                return;
            }
            for a in 1..=n {
                if !used[a as usize] {
                    used[a as usize] = true;
                    cur.push(a);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[a as usize] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.is_empty() {
            return write!(f, "id");
        }
        if self.one_line.len() <= 9 {
            for a in &self.one_line {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.one_line.iter().map(|a| a.to_string()).collect();
            write!(f, "[{}]", s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits form `82154763`, list form `[8,2,1,...]`, or `id`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s.is_empty() {
            return Ok(Permutation::identity());
        }
        let v: Vec<u32> = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or(Error::Parse {
                pos: s.len(),
                msg: "expected ']'".into(),
            })?;
            let mut v = Vec::new();
            let mut pos = 1;
            for part in inner.split(',') {
                v.push(part.trim().parse::<u32>().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("expected an integer, found '{}'", part.trim()),
                })?);
                pos += part.len() + 1;
            }
            v
        } else {
            let mut v = Vec::new();
            for (k, ch) in s.chars().enumerate() {
                v.push(ch.to_digit(10).ok_or(Error::Parse {
                    pos: k,
                    msg: format!("unexpected '{ch}' in one-line notation"),
                })?);
            }
            v
        };
        Permutation::new(v)
    }
}

/// All reduced words in lexicographic order.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(w.length() as usize);
    fn rec(v: &Permutation, word: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v.is_identity() {
            out.push(word.clone());
            return;
        }
        for i in v.left_descents() {
            word.push(i);
            rec(&v.mul_s_left(i), word, out);
            word.pop();
        }
    }
    rec(w, &mut word, &mut out);
    out
}

/// `|Red(w)|` by memoized recursion over descents.
pub fn count_reduced_words(w: &Permutation) -> BigUint {
    fn rec(v: &Permutation, memo: &mut HashMap<Permutation, BigUint>) -> BigUint {
        if v.is_identity() {
            return BigUint::one();
        }
        if let Some(c) = memo.get(v) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for i in v.descents() {
            total += rec(&v.mul_s_right(i), memo);
        }
        memo.insert(v.clone(), total.clone());
        total
    }
    rec(w, &mut HashMap::new())
}

/// Weighted generating function of the subwords of `letters` that are reduced
/// words of `w`. `letters[p] = (simple reflection index, weight)`.
pub fn reduced_subword_gf(letters: &[(u32, Poly)], w: &Permutation) -> Poly {
    let target_len = w.length() as usize;
    let winv = w.inverse();
    let n = letters
        .iter()
        .map(|(a, _)| a + 1)
        .max()
        .unwrap_or(0)
        .max(w.n());
    let start: Vec<u32> = (1..=n).collect();
    let mut memo: HashMap<(usize, Vec<u32>), Poly> = HashMap::new();
    // Occurrences of each letter at or after a position, for pruning.
    let mut remaining = vec![0usize; letters.len() + 1];
    for p in (0..letters.len()).rev() {
        remaining[p] = remaining[p + 1] + 1;
    }
    fn rec(
        p: usize,
        u: &mut Vec<u32>,
        chosen: usize,
        target_len: usize,
        letters: &[(u32, Poly)],
        winv: &Permutation,
        remaining: &[usize],
        memo: &mut HashMap<(usize, Vec<u32>), Poly>,
    ) -> Poly {
        if chosen == target_len {
            return Poly::one();
        }
        if remaining[p] < target_len - chosen {
            return Poly::zero();
        }
        if let Some(r) = memo.get(&(p, u.clone())) {
            return r.clone();
        }
        let mut total = rec(p + 1, u, chosen, target_len, letters, winv, remaining, memo);
        let (j, wt) = &letters[p];
        let (a, b) = (u[(*j - 1) as usize], u[*j as usize]);
        if a < b && winv.apply(a) > winv.apply(b) {
            u.swap((*j - 1) as usize, *j as usize);
            let rest = rec(p + 1, u, chosen + 1, target_len, letters, winv, remaining, memo);
            u.swap((*j - 1) as usize, *j as usize);
            if !rest.is_zero() {
                total += &(wt * &rest);
            }
        }
        memo.insert((p, u.clone()), total.clone());
        total
    }
    let mut u = start;
    rec(0, &mut u, 0, target_len, letters, &winv, &remaining, &mut memo)
}

/// Positions of all subwords of `word` that are reduced words of `w`.
pub fn reduced_subwords(word: &[u32], w: &Permutation) -> Vec<Vec<usize>> {
    let target_len = w.length() as usize;
    let winv = w.inverse();
    let n = word.iter().map(|a| a + 1).max().unwrap_or(0).max(w.n());
    let mut u: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    let mut pos = Vec::new();
    fn rec(
        p: usize,
        word: &[u32],
        u: &mut Vec<u32>,
        pos: &mut Vec<usize>,
        target_len: usize,
        winv: &Permutation,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos.len() == target_len {
            out.push(pos.clone());
            return;
        }
        if word.len() - p < target_len - pos.len() {
            return;
        }
        let j = word[p] as usize;
        let (a, b) = (u[j - 1], u[j]);
        if a < b && winv.apply(a) > winv.apply(b) {
            u.swap(j - 1, j);
            pos.push(p);
            rec(p + 1, word, u, pos, target_len, winv, out);
            pos.pop();
            u.swap(j - 1, j);
        }
        rec(p + 1, word, u, pos, target_len, winv, out);
    }
    rec(0, word, &mut u, &mut pos, target_len, &winv, &mut out);
    out.sort();
    out
}

type SchubertMemo = RwLock<HashMap<Permutation, Arc<Poly>>>;

fn schubert_memo() -> &'static SchubertMemo {
    static MEMO: OnceLock<SchubertMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `S_{w0}` for `S_n`: `prod_{i+j<=n} (x_i - t_j)`.
pub fn schubert_longest(n: u32) -> Poly {
    let mut p = Poly::one();
    for i in 1..n {
        for j in 1..=n - i {
            p = &p * &Poly::x_minus_t(i, j);
        }
    }
    p
}

/// Double Schubert polynomial by divided differences from the top of the
/// smallest `S_n` containing `w`, along the lexicographically smallest reduced
/// word of `w^{-1} w0`. Results (including intermediate ones) are memoized.
pub fn schubert_dd(w: &Permutation) -> Arc<Poly> {
    if let Some(p) = schubert_memo().read().expect("memo lock").get(w) {
        return p.clone();
    }
    let n = w.n().max(1);
    let w0 = Permutation::longest(n);
    let path = w.inverse().compose(&w0).lex_min_reduced_word();
    let mut cur = w0.clone();
    let mut poly = Arc::new(schubert_longest(n));
    let mut computed: Vec<(Permutation, Arc<Poly>)> = vec![(cur.clone(), poly.clone())];
    for &i in path.iter().rev() {
        cur = cur.mul_s_right(i);
        let cached = schubert_memo().read().expect("memo lock").get(&cur).cloned();
        poly = match cached {
            Some(p) => p,
            None => Arc::new(poly.divided_difference(i)),
        };
        computed.push((cur.clone(), poly.clone()));
    }
    debug_assert_eq!(&cur, w);
    let mut memo = schubert_memo().write().expect("memo lock");
    for (v, p) in computed {
        memo.entry(v).or_insert(p);
    }
    poly
}

/// Double Schubert polynomial by divided differences along an explicit word:
/// `word` must be a reduced word of `w^{-1} w0` for `w0` in `S_n`.
pub fn schubert_dd_along(w: &Permutation, n: u32, word: &[u32]) -> Result<Poly> {
    let w0 = Permutation::longest(n);
    let v = w.inverse().compose(&w0);
    if !v.is_reduced_word(word) {
        return Err(Error::NotReduced(word.to_vec(), v.to_string()));
    }
    let mut p = schubert_longest(n);
    for &i in word.iter().rev() {
        p = p.divided_difference(i);
    }
    Ok(p)
}

/// Double Schubert polynomial from pipe dreams: reduced subwords of
/// `n^{(1)} (n-1)^{(2)} n^{(2)} ... 1^{(n)} ... n^{(n)}`, letter `j^{(i)}`
/// weighted by `x_{j+i-n} - t_{n+1-i}`, for `w` in `S_{n+1}`.
pub fn schubert_pipedream(w: &Permutation) -> Poly {
    if w.is_identity() {
        return Poly::one();
    }
    let n = w.n() - 1;
    let mut letters = Vec::new();
    for i in 1..=n {
        for j in (n + 1 - i)..=n {
            letters.push((j, Poly::x_minus_t(j + i - n, n + 1 - i)));
        }
    }
    reduced_subword_gf(&letters, w)
}

/// AJS–Billey: `ev_σ S_v` as a sum over reduced subwords for `v` of a
/// reduced word `ω` of `σ`.
pub fn ajs_billey_schubert(v: &Permutation, sigma: &Permutation, omega: &[u32]) -> Result<Poly> {
    if !sigma.is_reduced_word(omega) {
        return Err(Error::NotReduced(omega.to_vec(), sigma.to_string()));
    }
    Ok(reduced_subword_gf(&ajs_weights(omega), v))
}

/// Position weights `t_{σ^{(p-1)}(i_p+1)} - t_{σ^{(p-1)}(i_p)}` of a word.
pub fn ajs_weights(omega: &[u32]) -> Vec<(u32, Poly)> {
    let n = omega.iter().map(|a| a + 1).max().unwrap_or(0);
    let mut prefix: Vec<u32> = (1..=n).collect();
    let mut out = Vec::with_capacity(omega.len());
    for &i in omega {
        let (a, b) = (prefix[(i - 1) as usize], prefix[i as usize]);
        out.push((i, Poly::t_diff(b, a)));
        prefix.swap((i - 1) as usize, i as usize);
    }
    out
}
