//! Noncrossing permutations: recognition, noncrossing descents and reduced
//! words, vert codes, the forest bijection, heaps and depletion.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::IndexedForest;
use crate::symgroup::Permutation;
use crate::vine::{LongWord, Subword};

/// Default bound for exhaustive routines.
pub const DEFAULT_NMAX: usize = 7;

/// Cycles of `w` as a permutation of `[n]`, each sorted, ordered by maximum.
pub fn cycles(w: &Permutation, n: u32) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n as usize + 1];
    let mut out = Vec::new();
    for i in 1..=n {
        if seen[i as usize] {
            continue;
        }
        let mut c = Vec::new();
        let mut j = i;
        while !seen[j as usize] {
            seen[j as usize] = true;
            c.push(j);
            j = w.apply(j);
        }
        c.sort_unstable();
        out.push(c);
    }
    out.sort_by_key(|c| *c.last().unwrap());
    out
}

fn crossing(b: &[u32], c: &[u32]) -> bool {
    for &a in b {
        for &bb in b {
            if a >= bb {
                continue;
            }
            for &x in c {
                for &d in c {
                    if a < x && x < bb && bb < d {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn is_backward_cycle(w: &Permutation, c: &[u32]) -> bool {
    let p = c.len();
    (0..p).all(|k| w.apply(c[k]) == c[(k + p - 1) % p])
}

/// True iff `w` is the product of the backward cycles of a noncrossing
/// set partition.
pub fn is_noncrossing(w: &Permutation) -> bool {
    let cs = cycles(w, w.n());
    if !cs.iter().all(|c| is_backward_cycle(w, c)) {
        return false;
    }
    for (k, b) in cs.iter().enumerate() {
        for c in &cs[k + 1..] {
            if crossing(b, c) || crossing(c, b) {
                return false;
            }
        }
    }
    true
}

/// A noncrossing permutation of `[n]` with its block view.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPerm {
    n: u32,
    perm: Permutation,
    blocks: Vec<Vec<u32>>,
}

impl NoncrossingPerm {
    pub fn new(perm: Permutation, n: u32) -> Result<Self> {
        if perm.n() > n {
            return Err(Error::InvalidPermutation(format!("{perm} does not lie in S_{n}")));
        }
        if !is_noncrossing(&perm) {
            return Err(Error::NotNoncrossing(perm.to_string()));
        }
        let blocks = cycles(&perm, n);
        Ok(NoncrossingPerm { n, perm, blocks })
    }

    /// The noncrossing permutation in its minimal `S_n`.
    pub fn from_perm(perm: Permutation) -> Result<Self> {
        let n = perm.n();
        NoncrossingPerm::new(perm, n)
    }

    pub fn identity(n: u32) -> Self {
        NoncrossingPerm::new(Permutation::identity(), n).expect("identity")
    }

    /// From a set partition of `[n]`; omitted elements become singletons.
    pub fn from_blocks(blocks: &[Vec<u32>], n: u32) -> Result<Self> {
        let mut seen = vec![false; n as usize + 1];
        let mut one_line: Vec<u32> = (1..=n).collect();
        for b in blocks {
            let mut b = b.clone();
            b.sort_unstable();
            for &a in &b {
                if a == 0 || a > n || seen[a as usize] {
                    return Err(Error::Precondition(format!("blocks {blocks:?} do not partition [{n}]")));
                }
                seen[a as usize] = true;
            }
            let p = b.len();
            for k in 0..p {
                one_line[(b[k] - 1) as usize] = b[(k + p - 1) % p];
            }
        }
        let perm = Permutation::new(one_line)?;
        NoncrossingPerm::new(perm, n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.perm.apply(i)
    }

    /// Blocks (including singletons), each sorted, ordered by maximum.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_of(&self, i: u32) -> &[u32] {
        self.blocks.iter().find(|b| b.contains(&i)).expect("element of [n]")
    }

    /// Number of blocks `C` with `min C < i < max C` and `i ∉ C`.
    pub fn nesting_count(&self, i: u32) -> u32 {
        self.blocks
            .iter()
            .filter(|c| !c.contains(&i) && c[0] < i && i < *c.last().unwrap())
            .count() as u32
    }

    /// Whether block `b` lies under an arc of another block.
    pub fn block_is_nested(&self, b: &[u32]) -> bool {
        self.nesting_count(b[0]) > 0
    }

    /// All of `NC_n`, in lexicographic order of one-line notation.
    pub fn all(n: u32) -> Vec<NoncrossingPerm> {
        Permutation::all(n)
            .into_iter()
            .filter(is_noncrossing)
            .map(|p| NoncrossingPerm::new(p, n).expect("noncrossing"))
            .collect()
    }

    /// Block codec, e.g. `138/2/45/67`.
    pub fn block_string(&self) -> String {
        let wide = self.n > 9;
        self.blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|a| a.to_string()).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn parse_blocks(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut pos = 0;
        for part in s.trim().split('/') {
            let elems: Vec<u32> = if part.contains(',') {
                part.split(',')
                    .map(|x| {
                        x.trim().parse::<u32>().map_err(|_| Error::Parse {
                            pos,
                            msg: format!("bad block element '{x}'"),
                        })
                    })
                    .collect::<Result<_>>()?
            } else {
                part.trim()
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10).ok_or(Error::Parse {
                            pos,
                            msg: format!("bad block element '{ch}'"),
                        })
                    })
                    .collect::<Result<_>>()?
            };
            pos += part.len() + 1;
            blocks.push(elems);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        NoncrossingPerm::from_blocks(&blocks, n)
    }
}

impl fmt::Display for NoncrossingPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = self.perm.padded(self.n);
        if self.n <= 9 {
            for a in line {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = line.iter().map(|a| a.to_string()).collect();
            write!(f, "[{}]", s.join(","))
        }
    }
}

impl FromStr for NoncrossingPerm {
    type Err = Error;

    /// One-line notation (ambient `n` is the string length) or block form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('/') {
            return NoncrossingPerm::parse_blocks(s);
        }
        let n = if let Some(inner) = s.strip_prefix('[') {
            inner.trim_end_matches(']').split(',').count() as u32
        } else {
            s.chars().count() as u32
        };
        let perm: Permutation = s.parse()?;
        NoncrossingPerm::new(perm, n)
    }
}

/// Noncrossing descents: `i ∈ Des(σ)` with `σ s_i` noncrossing.
pub fn nc_descents(sigma: &NoncrossingPerm) -> BTreeSet<u32> {
    (1..sigma.n())
        .filter(|&i| sigma.perm.has_descent(i) && is_noncrossing(&sigma.perm.mul_s_right(i)))
        .collect()
}

/// `σ s_i` as a noncrossing permutation of the same `[n]`.
fn times_s(sigma: &NoncrossingPerm, i: u32) -> NoncrossingPerm {
    NoncrossingPerm::new(sigma.perm.mul_s_right(i), sigma.n).expect("noncrossing")
}

/// All noncrossing reduced words, sorted lexicographically.
pub fn nc_reduced_words(sigma: &NoncrossingPerm) -> Vec<Vec<u32>> {
    fn rec(s: &NoncrossingPerm, memo: &mut HashMap<Permutation, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
        if s.perm.is_identity() {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(&s.perm) {
            return v.clone();
        }
        let mut out = Vec::new();
        for a in nc_descents(s) {
            for mut w in rec(&times_s(s, a), memo) {
                w.push(a);
                out.push(w);
            }
        }
        memo.insert(s.perm.clone(), out.clone());
        out
    }
    let mut out = rec(sigma, &mut HashMap::new());
    out.sort();
    out
}

/// `|RedNC(σ)|` by memoized recursion.
pub fn count_nc_reduced_words(sigma: &NoncrossingPerm) -> BigUint {
    fn rec(s: &NoncrossingPerm, memo: &mut HashMap<Permutation, BigUint>) -> BigUint {
        if s.perm.is_identity() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&s.perm) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for a in nc_descents(s) {
            total += rec(&times_s(s, a), memo);
        }
        memo.insert(s.perm.clone(), total.clone());
        total
    }
    rec(sigma, &mut HashMap::new())
}

/// Whether `omega` is a noncrossing reduced word of `σ`.
pub fn is_nc_reduced_word(sigma: &NoncrossingPerm, omega: &[u32]) -> bool {
    if Permutation::from_word(omega) != sigma.perm || omega.len() as u32 != sigma.perm.length() {
        return false;
    }
    let mut cur = Permutation::identity();
    for &a in omega {
        if a == 0 || a >= sigma.n {
            return false;
        }
        let next = cur.mul_s_right(a);
        if !is_noncrossing(&next) || !next.has_descent(a) {
            return false;
        }
        cur = next;
    }
    true
}

/// `vert_i = 2·#(cycles nesting i) + [i not maximal in its cycle]`.
pub fn vert_code(sigma: &NoncrossingPerm) -> Vec<u32> {
    (1..=sigma.n)
        .map(|i| {
            let b = sigma.block_of(i);
            2 * sigma.nesting_count(i) + u32::from(*b.last().unwrap() != i)
        })
        .collect()
}

/// Gobet–Williams: Bruhat order on `NC_n` by componentwise vert codes.
pub fn bruhat_leq_nc(tau: &NoncrossingPerm, sigma: &NoncrossingPerm) -> Result<bool> {
    if tau.n != sigma.n {
        return Err(Error::Precondition(format!(
            "ambient sizes differ: {} vs {}",
            tau.n, sigma.n
        )));
    }
    Ok(vert_code(tau).iter().zip(vert_code(sigma)).all(|(a, b)| *a <= b))
}

/// Long word used for the canonical subwords of `σ ∈ NC_n`.
pub fn canonical_long_word(n: u32) -> LongWord {
    LongWord::new(n.saturating_sub(1).max(1))
}

/// `(ncrmin, sylcont, sylmin)`: for each `i` with `vert_i ≠ 0`, the first
/// `vert_i` instances of `i`, the instances from the `vert_i`-th on, and the
/// `vert_i`-th instance alone.
pub fn canonical_words(sigma: &NoncrossingPerm) -> (Subword, Subword, Subword) {
    let lw = canonical_long_word(sigma.n);
    let vert = vert_code(sigma);
    let (mut ncrmin, mut sylcont, mut sylmin) = (Vec::new(), Vec::new(), Vec::new());
    for (k, &v) in vert.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let inst = lw.instances((k + 1) as u32);
        let v = v as usize;
        assert!(v <= inst.len(), "vert code exceeds available instances");
        ncrmin.extend_from_slice(&inst[..v]);
        sylcont.extend_from_slice(&inst[v - 1..]);
        sylmin.push(inst[v - 1]);
    }
    (
        Subword::new(&lw, ncrmin).expect("positions"),
        Subword::new(&lw, sylcont).expect("positions"),
        Subword::new(&lw, sylmin).expect("positions"),
    )
}

/// ForToNC: delete the left edge of every internal right child; the leaf
/// sets of the resulting trees are the cycles.
pub fn for_to_nc(f: &IndexedForest, n: u32) -> Result<NoncrossingPerm> {
    if f.max_support() > n {
        return Err(Error::Support(f.to_string(), n as usize));
    }
    let t = f.tree();
    let mut parent: Vec<u32> = (0..=n).collect();
    fn find(p: &mut [u32], a: u32) -> u32 {
        let mut r = a;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        let mut a = a;
        while p[a as usize] != r {
            let next = p[a as usize];
            p[a as usize] = r;
            a = next;
        }
        r
    }
    for (v, node) in t.nodes.iter().enumerate() {
        let is_right_child = node
            .parent
            .map(|p| t.nodes[p].right == crate::forest::Child::Node(v))
            .unwrap_or(false);
        if !is_right_child {
            let (a, b) = (find(&mut parent, node.flag), find(&mut parent, node.last_leaf));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<u32, Vec<u32>> = HashMap::new();
    for i in 1..=n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let blocks: Vec<Vec<u32>> = groups.into_values().collect();
    NoncrossingPerm::from_blocks(&blocks, n)
}

/// Inverse of [`for_to_nc`]: `c_{min B} = |B|` for nested blocks and
/// `|B| - 1` otherwise.
pub fn nc_to_for(sigma: &NoncrossingPerm) -> IndexedForest {
    let mut code = vec![0u32; sigma.n as usize];
    for b in &sigma.blocks {
        let c = if sigma.block_is_nested(b) { b.len() } else { b.len() - 1 };
        code[(b[0] - 1) as usize] = c as u32;
    }
    IndexedForest::new(code)
}

/// Remove `a` from its block and renumber: `i -> i - [i > a]`.
pub fn deplete(sigma: &NoncrossingPerm, a: u32) -> Result<NoncrossingPerm> {
    if a == 0 || a > sigma.n {
        return Err(Error::Precondition(format!("{a} is not in [{}]", sigma.n)));
    }
    let blocks: Vec<Vec<u32>> = sigma
        .blocks
        .iter()
        .map(|b| {
            b.iter()
                .filter(|&&i| i != a)
                .map(|&i| if i > a { i - 1 } else { i })
                .collect::<Vec<u32>>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    NoncrossingPerm::from_blocks(&blocks, sigma.n - 1)
}

/// Removes every `a` from a noncrossing reduced word and decrements larger
/// letters. Requires `a` to be a noncrossing descent of the word's product.
pub fn deplete_word(omega: &[u32], a: u32) -> Result<Vec<u32>> {
    let perm = Permutation::from_word(omega);
    let n = perm.n().max(a + 1);
    let sigma = NoncrossingPerm::new(perm, n)
        .map_err(|_| Error::Precondition(format!("{omega:?} is not a noncrossing word")))?;
    if !is_nc_reduced_word(&sigma, omega) {
        return Err(Error::NotNcReduced(omega.to_vec(), sigma.to_string()));
    }
    if !nc_descents(&sigma).contains(&a) {
        return Err(Error::Precondition(format!("{a} is not a noncrossing descent of {sigma}")));
    }
    Ok(omega
        .iter()
        .filter(|&&b| b != a)
        .map(|&b| if b > a { b - 1 } else { b })
        .collect())
}

/// The classes of `σ ~ σ s_i` for `i ∈ {σ(i), σ(i+1)}` on `S_n`; the class of
/// the identity comes first, the rest ordered by their smallest element.
pub fn nc_equivalence_classes(n: u32, bound: usize) -> Result<Vec<Vec<Permutation>>> {
    if n as usize > bound {
        return Err(Error::BoundExceeded { n: n as usize, bound });
    }
    let all = Permutation::all(n);
    let index: HashMap<Permutation, usize> = all.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let mut class = vec![usize::MAX; all.len()];
    let mut classes: Vec<Vec<Permutation>> = Vec::new();
    let id_pos = index[&Permutation::identity()];
    let order: Vec<usize> = std::iter::once(id_pos).chain((0..all.len()).filter(|&k| k != id_pos)).collect();
    for start in order {
        if class[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        class[start] = cid;
        while let Some(k) = queue.pop_front() {
            let s = &all[k];
            members.push(s.clone());
            for i in 1..n {
                if s.apply(i) == i || s.apply(i + 1) == i {
                    let t = index[&s.mul_s_right(i)];
                    if class[t] == usize::MAX {
                        class[t] = cid;
                        queue.push_back(t);
                    }
                }
            }
        }
        members.sort();
        classes.push(members);
    }
    classes[1..].sort();
    Ok(classes)
}

/// The heap of a word: `i ≺ j` generated by `i < j` and `|ω_i - ω_j| ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heap {
    pub word: Vec<u32>,
    /// `below[j]`: bitmask of all `i ≺ j` (transitively closed).
    pub below: Vec<u64>,
}

impl Heap {
    pub fn new(word: &[u32]) -> Result<Self> {
        if word.len() > 64 {
            return Err(Error::BoundExceeded { n: word.len(), bound: 64 });
        }
        let mut below = vec![0u64; word.len()];
        for j in 0..word.len() {
            for i in 0..j {
                if word[i].abs_diff(word[j]) <= 1 {
                    below[j] |= (1u64 << i) | below[i];
                }
            }
        }
        Ok(Heap {
            word: word.to_vec(),
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    /// Cover relations `(i, j)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in 0..j {
                if self.precedes(i, j) && !(i + 1..j).any(|k| self.precedes(i, k) && self.precedes(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of linear extensions, by dynamic programming over order ideals.
    pub fn linear_extension_count(&self) -> BigUint {
        let n = self.len();
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: HashMap<u64, BigUint> = HashMap::new();
        fn rec(h: &Heap, ideal: u64, full: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
            if ideal == full {
                return BigUint::one();
            }
            if let Some(v) = memo.get(&ideal) {
                return v.clone();
            }
            let mut total = BigUint::zero();
            for j in 0..h.len() {
                if ideal >> j & 1 == 0 && h.below[j] & !ideal == 0 {
                    total += rec(h, ideal | 1u64 << j, full, memo);
                }
            }
            memo.insert(ideal, total.clone());
            total
        }
        rec(self, 0, full, &mut memo)
    }

    /// Words obtained by reading linear extensions.
    pub fn linear_extension_words(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(h: &Heap, ideal: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == h.len() {
                out.push(cur.clone());
                return;
            }
            for j in 0..h.len() {
                if ideal >> j & 1 == 0 && h.below[j] & !ideal == 0 {
                    cur.push(h.word[j]);
                    rec(h, ideal | 1u64 << j, cur, out);
                    cur.pop();
                }
            }
        }
        rec(self, 0, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

/// `InvNC(σ) = {(i,j) : i<j, σ(i) > σ(j), σ·(i j) ∈ NC_n}`.
pub fn inv_nc(sigma: &NoncrossingPerm) -> BTreeSet<(u32, u32)> {
    let n = sigma.n;
    let mut out = BTreeSet::new();
    let line = sigma.perm.padded(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if line[(i - 1) as usize] > line[(j - 1) as usize] {
                let mut v = line.clone();
                v.swap((i - 1) as usize, (j - 1) as usize);
                if is_noncrossing(&Permutation::new(v).expect("permutation")) {
                    out.insert((i, j));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(s: &str) -> NoncrossingPerm {
        s.parse().unwrap()
    }

    #[test]
    fn recognition() {
        assert!(!is_noncrossing(&"231".parse().unwrap()));
        assert!(is_noncrossing(&Permutation::identity()));
        let s = nc("82154763");
        assert_eq!(s.block_string(), "2/45/67/138");
        assert_eq!(NoncrossingPerm::parse_blocks("138/2/45/67").unwrap(), s);
    }

    #[test]
    fn descents_and_words() {
        let s = nc("82154763");
        assert_eq!(nc_descents(&s), BTreeSet::from([2, 4, 6]));
        assert!(nc_descents(&NoncrossingPerm::identity(3)).is_empty());
        assert_eq!(nc_descents(&nc("321")), BTreeSet::from([2]));
        assert_eq!(nc_reduced_words(&NoncrossingPerm::identity(3)), vec![Vec::<u32>::new()]);
        assert!(is_nc_reduced_word(&s, &[7, 6, 5, 4, 3, 2, 1, 4, 5, 4, 6, 7, 6, 2]));
    }

    #[test]
    fn vert_examples() {
        assert_eq!(vert_code(&nc("82154763")), vec![1, 2, 1, 3, 2, 3, 2, 0]);
        assert_eq!(vert_code(&NoncrossingPerm::identity(4)), vec![0; 4]);
        assert_eq!(vert_code(&nc("21")), vec![1, 0]);
        assert!(bruhat_leq_nc(&nc("213"), &nc("321")).unwrap());
    }

    #[test]
    fn canonical_word_examples() {
        let lw = canonical_long_word(4);
        let (ncrmin, _, sylmin) = canonical_words(&nc("4321"));
        assert_eq!(ncrmin.values(&lw), vec![3, 2, 1, 2, 3, 2]);
        assert_eq!(sylmin.values(&lw), vec![1, 3, 2]);
        let s = nc("82154763");
        let lw = canonical_long_word(8);
        let (ncrmin, _, _) = canonical_words(&s);
        assert_eq!(ncrmin.values(&lw), vec![7, 6, 5, 4, 3, 2, 1, 2, 4, 5, 6, 7, 6, 4]);
        assert!(is_nc_reduced_word(&s, &ncrmin.values(&lw)));
        let (a, b, c) = canonical_words(&NoncrossingPerm::identity(3));
        assert!(a.is_empty() && b.is_empty() && c.is_empty());
    }

    #[test]
    fn bijection_examples() {
        let s = nc("82154763");
        let f = nc_to_for(&s);
        assert_eq!(f, "(2,1,0,2,0,2)".parse().unwrap());
        assert_eq!(for_to_nc(&f, 8).unwrap(), s);
        assert_eq!(for_to_nc(&IndexedForest::empty(), 5).unwrap(), NoncrossingPerm::identity(5));
        assert!(for_to_nc(&f, 7).is_err());
    }

    #[test]
    fn depletion_examples() {
        assert_eq!(deplete(&nc("82154763"), 4).unwrap(), nc("7214653"));
        assert_eq!(
            deplete_word(&[7, 6, 5, 4, 3, 2, 1, 4, 5, 4, 6, 7, 6, 2], 4).unwrap(),
            vec![6, 5, 4, 3, 2, 1, 4, 5, 6, 5, 2]
        );
        assert_eq!(deplete(&NoncrossingPerm::identity(4), 2).unwrap(), NoncrossingPerm::identity(3));
        assert!(deplete_word(&[7, 6, 5, 4, 3, 2, 1, 4, 5, 4, 6, 7, 6, 2], 3).is_err());
    }

    #[test]
    fn classes() {
        let c3 = nc_equivalence_classes(3, DEFAULT_NMAX).unwrap();
        assert_eq!(c3.len(), 2);
        assert_eq!(c3[1], vec!["231".parse::<Permutation>().unwrap()]);
        assert_eq!(nc_equivalence_classes(1, DEFAULT_NMAX).unwrap(), vec![vec![Permutation::identity()]]);
        assert!(nc_equivalence_classes(8, DEFAULT_NMAX).is_err());
    }

    #[test]
    fn heap_examples() {
        assert_eq!(Heap::new(&[3]).unwrap().linear_extension_count(), BigUint::one());
        let h = Heap::new(&[1, 2, 1]).unwrap();
        assert_eq!(h.linear_extension_count(), BigUint::one());
        let h = Heap::new(&[1, 3]).unwrap();
        assert_eq!(h.linear_extension_count(), BigUint::from(2u32));
    }

    #[test]
    fn inv_nc_examples() {
        let expect: BTreeSet<(u32, u32)> =
            [(1, 3), (1, 8), (2, 3), (4, 5), (4, 8), (6, 7), (6, 8)].into_iter().collect();
        assert_eq!(inv_nc(&nc("82154763")), expect);
        assert!(inv_nc(&NoncrossingPerm::identity(3)).is_empty());
        assert_eq!(inv_nc(&nc("21")), BTreeSet::from([(1, 2)]));
    }
}
