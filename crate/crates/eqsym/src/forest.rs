//! Indexed forests stored by their code, with the derived binary-tree view,
//! Sylvester words, the Thompson monoid product, trimming and padded
//! compositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An indexed forest, canonically represented by its code `(c1, c2, ...)`
/// where `c_i` counts internal nodes whose leftmost leaf is `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexedForest {
    code: Vec<u32>,
}

/// A child pointer in the tree view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Child {
    Leaf(u32),
    Node(usize),
}

/// One internal node of the tree view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub left: Child,
    pub right: Child,
    pub parent: Option<usize>,
    /// Canonical label: the rightmost leaf of the left subtree.
    pub label: u32,
    /// Leftmost leaf (reached along left edges).
    pub flag: u32,
    /// Rightmost leaf.
    pub last_leaf: u32,
}

/// Binary-tree view of an indexed forest; only nontrivial trees are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestTree {
    pub nodes: Vec<Node>,
    /// Roots of the nontrivial trees, left to right.
    pub roots: Vec<usize>,
}

impl ForestTree {
    pub fn node_with_label(&self, label: u32) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    /// Internal children of a node.
    pub fn internal_children(&self, v: usize) -> Vec<usize> {
        let n = &self.nodes[v];
        [n.left, n.right]
            .into_iter()
            .filter_map(|c| match c {
                Child::Node(u) => Some(u),
                Child::Leaf(_) => None,
            })
            .collect()
    }

    /// Code read off from the flags.
    pub fn code(&self) -> Vec<u32> {
        let mut code = Vec::new();
        for n in &self.nodes {
            let k = n.flag as usize;
            if code.len() < k {
                code.resize(k, 0);
            }
            code[k - 1] += 1;
        }
        code
    }

    /// Labels of the children of the node labeled `label`, as a map
    /// label -> parent label (None for roots).
    pub fn parent_labels(&self) -> Vec<(u32, Option<u32>)> {
        self.nodes
            .iter()
            .map(|n| (n.label, n.parent.map(|p| self.nodes[p].label)))
            .collect()
    }
}

#[derive(Clone, Copy)]
enum Place {
    Root,
    Left(usize),
    Right(usize),
}

impl IndexedForest {
    pub fn empty() -> Self {
        IndexedForest::default()
    }

    pub fn new(code: impl Into<Vec<u32>>) -> Self {
        let mut code = code.into();
        while code.last() == Some(&0) {
            code.pop();
        }
        IndexedForest { code }
    }

    /// The elementary forest `i`: one internal node joining leaves `i, i+1`.
    pub fn generator(i: u32) -> Self {
        assert!(i >= 1);
        let mut code = vec![0; i as usize];
        code[i as usize - 1] = 1;
        IndexedForest { code }
    }

    /// `i1 · i2 · ... · ik`.
    pub fn from_factorization(letters: &[u32]) -> Self {
        let mut f = IndexedForest::empty();
        for &i in letters {
            f = f.mul_generator(i);
        }
        f
    }

    pub fn code(&self) -> &[u32] {
        &self.code
    }

    pub fn c(&self, i: u32) -> u32 {
        self.code.get((i - 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    /// Number of internal nodes `|F|`.
    pub fn size(&self) -> u32 {
        self.code.iter().sum()
    }

    /// `{i : c_i > 0 and c_{i+1} = 0}`.
    pub fn qdes(&self) -> BTreeSet<u32> {
        (1..=self.code.len() as u32)
            .filter(|&i| self.c(i) > 0 && self.c(i + 1) == 0)
            .collect()
    }

    pub fn max_qdes(&self) -> u32 {
        self.code.len() as u32
    }

    /// `F / i`, defined when `i` is a quasi-descent.
    pub fn trim(&self, i: u32) -> Result<IndexedForest> {
        if i == 0 || self.c(i) == 0 || self.c(i + 1) != 0 {
            return Err(Error::NotQdes(i, self.to_string()));
        }
        let k = (i - 1) as usize;
        let mut code: Vec<u32> = self.code[..k].to_vec();
        code.push(self.code[k] - 1);
        if self.code.len() > k + 2 {
            code.extend_from_slice(&self.code[k + 2..]);
        }
        Ok(IndexedForest::new(code))
    }

    /// `F · i`: splits leaf `i` into a new terminal node.
    pub fn mul_generator(&self, i: u32) -> IndexedForest {
        assert!(i >= 1);
        let k = (i - 1) as usize;
        let mut code = self.code.clone();
        if code.len() <= k {
            code.resize(k + 1, 0);
        }
        let tail: Vec<u32> = code[k + 1..].to_vec();
        code.truncate(k + 1);
        code[k] += 1;
        code.push(0);
        code.extend(tail);
        IndexedForest::new(code)
    }

    /// The Thompson monoid product `F · G`.
    pub fn thompson_mul(&self, g: &IndexedForest) -> IndexedForest {
        let mut f = self.clone();
        for i in g.canonical_factorization() {
            f = f.mul_generator(i);
        }
        f
    }

    /// The weakly increasing factorization `1^{c1} 2^{c2} ...`.
    pub fn canonical_factorization(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (k, &c) in self.code.iter().enumerate() {
            for _ in 0..c {
                out.push(k as u32 + 1);
            }
        }
        out
    }

    /// The unique `H` with `self = H · f`, if any.
    pub fn right_quotient(&self, f: &IndexedForest) -> Option<IndexedForest> {
        let mut h = self.clone();
        for &i in f.canonical_factorization().iter().rev() {
            h = h.trim(i).ok()?;
        }
        Some(h)
    }

    /// `f <=_R self`, i.e. `self = H · f` for some `H`.
    pub fn has_right_factor(&self, f: &IndexedForest) -> bool {
        self.right_quotient(f).is_some()
    }

    /// Disjoint union `F ⊔ G`: adds codes. Panics if the supports meet.
    pub fn disjoint_union(&self, g: &IndexedForest) -> IndexedForest {
        assert!(self.is_disjoint_from(g), "supports of {self} and {g} intersect");
        let n = self.code.len().max(g.code.len());
        IndexedForest::new(
            (0..n)
                .map(|k| self.code.get(k).copied().unwrap_or(0) + g.code.get(k).copied().unwrap_or(0))
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_disjoint_from(&self, g: &IndexedForest) -> bool {
        self.support_sets().0.is_disjoint(&g.support_sets().0)
    }

    /// Tree view reconstructed from the code.
    pub fn tree(&self) -> ForestTree {
        struct Proto {
            left: Option<Child>,
            right: Option<Child>,
            place: Place,
        }
        let letters = self.canonical_factorization();
        let nleaves = letters.len() + self.code.len() + 1;
        let mut slots: Vec<Place> = vec![Place::Root; nleaves];
        let mut protos: Vec<Proto> = Vec::with_capacity(letters.len());
        for &i in &letters {
            let k = (i - 1) as usize;
            let id = protos.len();
            let place = slots[k];
            match place {
                Place::Left(p) => protos[p].left = Some(Child::Node(id)),
                Place::Right(p) => protos[p].right = Some(Child::Node(id)),
                Place::Root => {}
            }
            protos.push(Proto {
                left: None,
                right: None,
                place,
            });
            slots.splice(k..k + 1, [Place::Left(id), Place::Right(id)]);
        }
        for (k, place) in slots.iter().enumerate() {
            let leaf = Child::Leaf(k as u32 + 1);
            match *place {
                Place::Left(p) => protos[p].left = Some(leaf),
                Place::Right(p) => protos[p].right = Some(leaf),
                Place::Root => {}
            }
        }
        let mut nodes: Vec<Node> = protos
            .iter()
            .map(|p| Node {
                left: p.left.expect("left child"),
                right: p.right.expect("right child"),
                parent: match p.place {
                    Place::Root => None,
                    Place::Left(q) | Place::Right(q) => Some(q),
                },
                label: 0,
                flag: 0,
                last_leaf: 0,
            })
            .collect();
        fn first(nodes: &[Node], c: Child) -> u32 {
            match c {
                Child::Leaf(l) => l,
                Child::Node(v) => first(nodes, nodes[v].left),
            }
        }
        fn last(nodes: &[Node], c: Child) -> u32 {
            match c {
                Child::Leaf(l) => l,
                Child::Node(v) => last(nodes, nodes[v].right),
            }
        }
        for v in 0..nodes.len() {
            let (l, r) = (nodes[v].left, nodes[v].right);
            nodes[v].label = last(&nodes, l);
            nodes[v].flag = first(&nodes, l);
            nodes[v].last_leaf = last(&nodes, r);
        }
        let mut roots: Vec<usize> = (0..nodes.len()).filter(|&v| nodes[v].parent.is_none()).collect();
        roots.sort_by_key(|&v| nodes[v].flag);
        ForestTree { nodes, roots }
    }

    /// Canonical labels of internal nodes, sorted.
    pub fn labels(&self) -> BTreeSet<u32> {
        self.tree().nodes.iter().map(|n| n.label).collect()
    }

    /// `(supp(F), L(F))`: leaves of nontrivial trees and `{x : x, x+1 in supp}`.
    pub fn support_sets(&self) -> (BTreeSet<u32>, BTreeSet<u32>) {
        let t = self.tree();
        let mut supp = BTreeSet::new();
        for &r in &t.roots {
            let n = &t.nodes[r];
            supp.extend(n.flag..=n.last_leaf);
        }
        let l = supp.iter().copied().filter(|x| supp.contains(&(x + 1))).collect();
        (supp, l)
    }

    /// Largest leaf in a nontrivial tree (0 for the empty forest).
    pub fn max_support(&self) -> u32 {
        let t = self.tree();
        t.roots.iter().map(|&r| t.nodes[r].last_leaf).max().unwrap_or(0)
    }

    /// Largest canonical label (0 for the empty forest).
    pub fn max_label(&self) -> u32 {
        self.max_support().saturating_sub(1)
    }

    /// `(leftmost leaf, rightmost leaf)` of each internal node.
    pub fn spread_set(&self) -> BTreeSet<(u32, u32)> {
        self.tree().nodes.iter().map(|n| (n.flag, n.last_leaf)).collect()
    }

    /// All Sylvester words in lexicographic order: orderings of the canonical
    /// labels in which each node precedes its children.
    pub fn sylvester_words(&self) -> Vec<Vec<u32>> {
        let t = self.tree();
        let mut out = Vec::new();
        let mut avail: BTreeSet<(u32, usize)> = t.roots.iter().map(|&r| (t.nodes[r].label, r)).collect();
        let mut word = Vec::with_capacity(t.nodes.len());
        fn rec(
            t: &ForestTree,
            avail: &mut BTreeSet<(u32, usize)>,
            word: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if avail.is_empty() {
                out.push(word.clone());
                return;
            }
            let choices: Vec<(u32, usize)> = avail.iter().copied().collect();
            for (lab, v) in choices {
                avail.remove(&(lab, v));
                let kids = t.internal_children(v);
                for &u in &kids {
                    avail.insert((t.nodes[u].label, u));
                }
                word.push(lab);
                rec(t, avail, word, out);
                word.pop();
                for &u in &kids {
                    avail.remove(&(t.nodes[u].label, u));
                }
                avail.insert((lab, v));
            }
        }
        rec(&t, &mut avail, &mut word, &mut out);
        out
    }

    /// All `(i1, ..., ik)` with `F = i1 · ... · ik`, sorted.
    pub fn trimming_sequences(&self) -> Vec<Vec<u32>> {
        if self.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.qdes() {
            let g = self.trim(i).expect("qdes");
            for mut s in g.trimming_sequences() {
                s.push(i);
                out.push(s);
            }
        }
        out.sort();
        out
    }

    /// All forests with `|F| = k` and code length at most `len`.
    pub fn with_size(k: u32, len: usize) -> Vec<IndexedForest> {
        let mut out = Vec::new();
        let mut code = vec![0u32; len];
        fn rec(pos: usize, left: u32, code: &mut Vec<u32>, out: &mut Vec<IndexedForest>) {
            if pos == code.len() {
                if left == 0 {
                    out.push(IndexedForest::new(code.clone()));
                }
                return;
            }
            for c in (0..=left).rev() {
                code[pos] = c;
                rec(pos + 1, left - c, code, out);
            }
            code[pos] = 0;
        }
        if len == 0 {
            if k == 0 {
                out.push(IndexedForest::empty());
            }
            return out;
        }
        rec(0, k, &mut code, &mut out);
        out
    }

    /// All forests with `|F| <= k` and code length at most `len`.
    pub fn up_to_size(k: u32, len: usize) -> Vec<IndexedForest> {
        (0..=k).flat_map(|s| IndexedForest::with_size(s, len)).collect()
    }

    /// `Forest_n`: forests whose nontrivial trees use only leaves in `[n]`.
    pub fn supported_on(n: u32) -> Vec<IndexedForest> {
        if n == 0 {
            return vec![IndexedForest::empty()];
        }
        let mut out: Vec<IndexedForest> = IndexedForest::up_to_size(n - 1, (n - 1) as usize)
            .into_iter()
            .filter(|f| f.max_support() <= n)
            .collect();
        out.sort();
        out
    }

    /// Factorization form `i1.i2.i3` (canonical factorization), `∅` if empty.
    pub fn factorization_string(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.canonical_factorization()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// The unique forest having `w` as a Sylvester word.
pub fn forest_of_word(w: &[u32]) -> Result<IndexedForest> {
    let letters: BTreeSet<u32> = w.iter().copied().collect();
    if letters.len() != w.len() {
        return Err(Error::Precondition(format!("word {w:?} has repeated letters")));
    }
    if letters.contains(&0) {
        return Err(Error::Precondition("letters must be positive".into()));
    }
    // Binary search tree insertion: first letter is the root. Track for each
    // inserted letter the minimum of its subtree by walking insertion paths.
    struct Bst {
        key: u32,
        left: Option<usize>,
        right: Option<usize>,
    }
    let mut nodes: Vec<Bst> = Vec::new();
    let mut roots: Vec<(u32, u32, usize)> = Vec::new();
    // maximal contiguous intervals of the letter set
    let mut intervals: Vec<(u32, u32)> = Vec::new();
    for &a in &letters {
        match intervals.last_mut() {
            Some((_, hi)) if *hi + 1 == a => *hi = a,
            _ => intervals.push((a, a)),
        }
    }
    for &a in w {
        let iv = intervals.iter().position(|&(lo, hi)| lo <= a && a <= hi).unwrap();
        let id = nodes.len();
        nodes.push(Bst {
            key: a,
            left: None,
            right: None,
        });
        match roots.iter().position(|&(lo, _, _)| lo == intervals[iv].0) {
            None => roots.push((intervals[iv].0, intervals[iv].1, id)),
            Some(r) => {
                let mut cur = roots[r].2;
                loop {
                    let go_right = a > nodes[cur].key;
                    let next = if go_right { nodes[cur].right } else { nodes[cur].left };
                    match next {
                        Some(nx) => cur = nx,
                        None => {
                            if go_right {
                                nodes[cur].right = Some(id);
                            } else {
                                nodes[cur].left = Some(id);
                            }
                            break;
                        }
                    }
                }
            }
        }
    }
    fn min_key(nodes: &[Bst], v: usize) -> u32 {
        match nodes[v].left {
            Some(l) => min_key(nodes, l),
            None => nodes[v].key,
        }
    }
    let mut code: Vec<u32> = Vec::new();
    for v in 0..nodes.len() {
        let flag = min_key(&nodes, v) as usize;
        if code.len() < flag {
            code.resize(flag, 0);
        }
        code[flag - 1] += 1;
    }
    Ok(IndexedForest::new(code))
}

impl fmt::Display for IndexedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.code.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn parse_uint_list(s: &str, sep: char, offset: usize) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for part in s.split(sep) {
        let trimmed = part.trim();
        match trimmed.parse::<u32>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected a nonnegative integer, found '{trimmed}'"),
                })
            }
        }
        pos += part.len() + sep.len_utf8();
    }
    Ok(out)
}

impl FromStr for IndexedForest {
    type Err = Error;

    /// Accepts the code form `(c1,...,ck)` and the factorization form
    /// `i1.i2...` (also with `·` or `*` as separator); `()`, `∅` and `1`
    /// denote the empty forest only in code form / symbol form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "()" || s == "empty" {
            return Ok(IndexedForest::empty());
        }
        if let Some(inner) = s.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or(Error::Parse {
                pos: s.len(),
                msg: "expected ')'".into(),
            })?;
            return Ok(IndexedForest::new(parse_uint_list(inner, ',', 1)?));
        }
        let norm: String = s.replace(['·', '*'], ".");
        let letters = parse_uint_list(&norm, '.', 0)?;
        if let Some(k) = letters.iter().position(|&i| i == 0) {
            return Err(Error::Parse {
                pos: k,
                msg: "factorization letters are positive".into(),
            });
        }
        Ok(IndexedForest::from_factorization(&letters))
    }
}

/// A padded composition `(0^{n-l}, a1, ..., al)` with all `a_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaddedComposition {
    parts: Vec<u32>,
}

impl PaddedComposition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        let first = parts.iter().position(|&a| a > 0).unwrap_or(parts.len());
        if parts[first..].contains(&0) {
            return Err(Error::Precondition(format!(
                "{parts:?}: zeros of a padded composition must form a prefix"
            )));
        }
        Ok(PaddedComposition { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Nonzero parts `a1, ..., al`.
    pub fn nonzero_parts(&self) -> Vec<u32> {
        self.parts.iter().copied().filter(|&a| a > 0).collect()
    }

    /// Partial sums `a1, a1+a2, ...` excluding the total.
    pub fn set(&self) -> BTreeSet<u32> {
        let a = self.nonzero_parts();
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &x in a.iter().take(a.len().saturating_sub(1)) {
            acc += x;
            out.insert(acc);
        }
        out
    }

    /// The zigzag forest with this code.
    pub fn zigzag(&self) -> IndexedForest {
        IndexedForest::new(self.parts.clone())
    }

    /// Inverse of [`PaddedComposition::zigzag`] on forests with `qdes ⊆ {n}`.
    pub fn from_zigzag(f: &IndexedForest, n: usize) -> Option<PaddedComposition> {
        if f.code().len() > n || !f.qdes().iter().all(|&q| q as usize == n) {
            return None;
        }
        let mut parts = f.code().to_vec();
        parts.resize(n, 0);
        PaddedComposition::new(parts).ok()
    }

    /// All padded compositions of length `n` and size `k`.
    pub fn all(n: usize, k: u32) -> Vec<PaddedComposition> {
        let mut out = Vec::new();
        for f in IndexedForest::with_size(k, n) {
            if let Some(c) = PaddedComposition::from_zigzag(&f, n) {
                out.push(c);
            }
        }
        if k == 0 {
            out = vec![PaddedComposition { parts: vec![0; n] }];
        }
        out.sort();
        out
    }
}

impl fmt::Display for PaddedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&a| a < 10) {
            for a in &self.parts {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

impl FromStr for PaddedComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts = if let Some(inner) = s.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or(Error::Parse {
                pos: s.len(),
                msg: "expected ')'".into(),
            })?;
            parse_uint_list(inner, ',', 1)?
        } else {
            let mut v = Vec::new();
            for (k, ch) in s.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) => v.push(d),
                    None => {
                        return Err(Error::Parse {
                            pos: k,
                            msg: format!("unexpected '{ch}' in composition"),
                        })
                    }
                }
            }
            v
        };
        PaddedComposition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> IndexedForest {
        s.parse().unwrap()
    }

    #[test]
    fn qdes_and_trim() {
        assert_eq!(f("(2,0,1)").qdes(), BTreeSet::from([1, 3]));
        assert!(IndexedForest::empty().qdes().is_empty());
        let z = PaddedComposition::new(vec![0, 0, 2, 2, 1, 2]).unwrap().zigzag();
        assert_eq!(z.qdes(), BTreeSet::from([6]));
        assert_eq!(f("(2,0,1)").trim(3).unwrap(), f("(2)"));
        assert_eq!(f("(1)").trim(1).unwrap(), IndexedForest::empty());
        assert_eq!(f("(2,0,1)").trim(1).unwrap(), f("(1,1)"));
        assert!(f("(2,0,1)").trim(2).is_err());
        assert!(IndexedForest::empty().trim(1).is_err());
    }

    #[test]
    fn thompson_products() {
        assert_eq!(f("3.1"), f("1.4"));
        assert_eq!(f("1.1.3").thompson_mul(&IndexedForest::empty()), f("1.1.3"));
        assert_eq!(f("1.1.3"), f("(2,0,1)"));
        assert_eq!(f("1.2.1"), f("1.1.3"));
        assert_eq!(f("(2,0,1)").to_string(), "(2,0,1)");
        assert_eq!(f("(2,0,1)").factorization_string(), "1.1.3");
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(f("2.2.3").sylvester_words(), vec![vec![4, 2, 3]]);
        assert_eq!(IndexedForest::empty().sylvester_words(), vec![Vec::<u32>::new()]);
        assert_eq!(f("(2,0,1)").sylvester_words(), vec![vec![2, 1, 3], vec![2, 3, 1]]);
    }

    #[test]
    fn forest_of_word_examples() {
        let g = forest_of_word(&[3, 4, 8, 2]).unwrap();
        assert_eq!(g, forest_of_word(&[3, 4, 2]).unwrap().disjoint_union(&forest_of_word(&[8]).unwrap()));
        assert!(g.sylvester_words().contains(&vec![3, 4, 8, 2]));
        assert_eq!(forest_of_word(&[]).unwrap(), IndexedForest::empty());
        assert_eq!(forest_of_word(&[2, 1, 3]).unwrap(), f("(2,0,1)"));
    }

    #[test]
    fn right_quotient_examples() {
        let g = f("1.1.3");
        assert_eq!(g.right_quotient(&g), Some(IndexedForest::empty()));
        assert_eq!(g.right_quotient(&f("1.3")), Some(f("1")));
        assert_eq!(f("1").right_quotient(&f("2")), None);
    }

    #[test]
    fn support_examples() {
        assert_eq!(f("(1)").support_sets(), (BTreeSet::from([1, 2]), BTreeSet::from([1])));
        assert_eq!(
            f("(2,0,1)").support_sets(),
            (BTreeSet::from([1, 2, 3, 4]), BTreeSet::from([1, 2, 3]))
        );
        assert_eq!(f("1.1").support_sets().1, BTreeSet::from([1, 2]));
    }

    #[test]
    fn zigzag_and_spread() {
        let c: PaddedComposition = "021".parse().unwrap();
        assert_eq!(c.zigzag(), f("2.2.3"));
        assert_eq!(c.set(), BTreeSet::from([2]));
        assert_eq!(PaddedComposition::new(vec![0, 0, 0]).unwrap().zigzag(), IndexedForest::empty());
        assert_eq!(f("(1)").spread_set(), BTreeSet::from([(1, 2)]));
        assert!(IndexedForest::empty().spread_set().is_empty());
        assert!(PaddedComposition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn trimming_sequence_examples() {
        assert_eq!(f("(1)").trimming_sequences(), vec![vec![1]]);
        let seqs = f("1.1.3").trimming_sequences();
        assert!(seqs.contains(&vec![1, 1, 3]) && seqs.contains(&vec![1, 2, 1]));
        assert_eq!(IndexedForest::empty().trimming_sequences(), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| IndexedForest::supported_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn parse_errors() {
        assert!("(1,a)".parse::<IndexedForest>().is_err());
        assert!("1.0".parse::<IndexedForest>().is_err());
        assert!("(1,2".parse::<IndexedForest>().is_err());
    }
}
