//! The long word, its weights and subword generating functions, AJS–Billey
//! for forests, and text vine diagrams.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::forest::{IndexedForest, PaddedComposition};
use crate::noncrossing::{for_to_nc, inv_nc, is_nc_reduced_word, NoncrossingPerm};
use crate::poly::Poly;
use crate::symgroup::{ajs_weights, reduced_subword_gf, reduced_subwords, Permutation};

/// One letter `j^{(i)}` or `j̄^{(i)}` of the long word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u32,
    pub syllable: u32,
    pub barred: bool,
    pub pos: usize,
}

impl Letter {
    /// `x_i - t_j` unbarred, `t_j - t_i` barred.
    pub fn weight(&self) -> Poly {
        if self.barred {
            Poly::t_diff(self.value, self.syllable)
        } else {
            Poly::x_minus_t(self.syllable, self.value)
        }
    }

    /// `y{i}{j}` or `z{i}{j}` (bracketed when an index exceeds 9).
    pub fn factor_name(&self) -> String {
        let head = if self.barred { 'z' } else { 'y' };
        if self.syllable > 9 || self.value > 9 {
            format!("{head}[{},{}]", self.syllable, self.value)
        } else {
            format!("{head}{}{}", self.syllable, self.value)
        }
    }
}

/// `ω^{(1)} ⋯ ω^{(n)}` with `ω^{(k)} = n ⋯ k+1 k k+1̄ ⋯ n̄`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LongWord {
    n: u32,
    letters: Vec<Letter>,
}

impl LongWord {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "long word needs n >= 1");
        let mut letters = Vec::with_capacity((n * n) as usize);
        for k in 1..=n {
            for j in (k..=n).rev() {
                letters.push(Letter { value: j, syllable: k, barred: false, pos: letters.len() });
            }
            for j in k + 1..=n {
                letters.push(Letter { value: j, syllable: k, barred: true, pos: letters.len() });
            }
        }
        LongWord { n, letters }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, pos: usize) -> &Letter {
        &self.letters[pos]
    }

    pub fn values(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.value).collect()
    }

    pub fn weighted(&self) -> Vec<(u32, Poly)> {
        self.letters.iter().map(|l| (l.value, l.weight())).collect()
    }

    /// Positions of the letters with value `v`, in reading order.
    pub fn instances(&self, v: u32) -> Vec<usize> {
        self.letters.iter().filter(|l| l.value == v).map(|l| l.pos).collect()
    }

    /// Position of `j^{(i)}` or `j̄^{(i)}`.
    pub fn position(&self, syllable: u32, value: u32, barred: bool) -> Option<usize> {
        self.letters
            .iter()
            .find(|l| l.syllable == syllable && l.value == value && l.barred == barred)
            .map(|l| l.pos)
    }
}

pub fn long_word(n: u32) -> LongWord {
    LongWord::new(n)
}

impl fmt::Display for LongWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cur = 1;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(if l.syllable != cur { " | " } else { " " })?;
            }
            cur = l.syllable;
            write!(f, "{}", l.value)?;
            if l.barred {
                f.write_str("\u{0304}")?;
            }
        }
        Ok(())
    }
}

/// Increasing positions in a long word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subword {
    positions: Vec<usize>,
}

impl Subword {
    pub fn new(lw: &LongWord, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubword("repeated position".into()));
        }
        if let Some(&p) = positions.iter().find(|&&p| p >= lw.len()) {
            return Err(Error::InvalidSubword(format!("position {p} outside a word of length {}", lw.len())));
        }
        Ok(Subword { positions })
    }

    pub fn empty() -> Self {
        Subword::default()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.positions.binary_search(&p).is_ok()
    }

    /// The induced word.
    pub fn values(&self, lw: &LongWord) -> Vec<u32> {
        self.positions.iter().map(|&p| lw.letter(p).value).collect()
    }

    pub fn weight(&self, lw: &LongWord) -> Poly {
        self.positions.iter().map(|&p| lw.letter(p).weight()).product()
    }

    /// Product of `y`/`z` factors, `1` when empty.
    pub fn factor_string(&self, lw: &LongWord) -> String {
        if self.positions.is_empty() {
            return "1".into();
        }
        self.positions
            .iter()
            .map(|&p| lw.letter(p).factor_name())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// `Σ_{π} wt(π)` over subwords of `lw` whose word lies in `words`.
pub fn subword_gf(lw: &LongWord, words: &[Vec<u32>]) -> Poly {
    let distinct: BTreeSet<&Vec<u32>> = words.iter().collect();
    let mut total = Poly::zero();
    for w in distinct {
        // embed[k] = generating function of embeddings of w[..k] so far.
        let mut embed = vec![Poly::zero(); w.len() + 1];
        embed[0] = Poly::one();
        for l in lw.letters() {
            for k in (0..w.len()).rev() {
                if w[k] == l.value && !embed[k].is_zero() {
                    let add = &embed[k] * &l.weight();
                    embed[k + 1] += &add;
                }
            }
        }
        total += &embed[w.len()];
    }
    total
}

/// Label order data for Sylvester membership: bit index and parent bit.
struct SylvesterShape {
    bit: HashMap<u32, usize>,
    parent_bit: Vec<Option<usize>>,
}

impl SylvesterShape {
    fn new(f: &IndexedForest) -> Self {
        let pl = f.tree().parent_labels();
        let bit: HashMap<u32, usize> = pl.iter().enumerate().map(|(k, (l, _))| (*l, k)).collect();
        let parent_bit = pl.iter().map(|(_, p)| p.map(|p| bit[&p])).collect();
        SylvesterShape { bit, parent_bit }
    }

    fn full(&self) -> u64 {
        if self.bit.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.bit.len()) - 1
        }
    }

    /// Bit of `v` if it may be appended to a Sylvester prefix using `mask`.
    fn admissible(&self, v: u32, mask: u64) -> Option<usize> {
        let &b = self.bit.get(&v)?;
        if mask >> b & 1 == 1 {
            return None;
        }
        match self.parent_bit[b] {
            Some(p) if mask >> p & 1 == 0 => None,
            _ => Some(b),
        }
    }
}

/// Weighted count of subwords of `letters` whose word is a Sylvester word of `f`.
pub fn sylvester_subword_gf(letters: &[(u32, Poly)], f: &IndexedForest) -> Poly {
    if f.is_empty() {
        return Poly::one();
    }
    assert!(f.size() <= 64, "forest too large");
    let shape = SylvesterShape::new(f);
    let full = shape.full();
    fn rec(
        p: usize,
        mask: u64,
        letters: &[(u32, Poly)],
        shape: &SylvesterShape,
        full: u64,
        memo: &mut HashMap<(usize, u64), Poly>,
    ) -> Poly {
        if mask == full {
            return Poly::one();
        }
        if p == letters.len() {
            return Poly::zero();
        }
        if let Some(r) = memo.get(&(p, mask)) {
            return r.clone();
        }
        let mut total = rec(p + 1, mask, letters, shape, full, memo);
        let (v, wt) = &letters[p];
        if let Some(b) = shape.admissible(*v, mask) {
            let rest = rec(p + 1, mask | 1u64 << b, letters, shape, full, memo);
            if !rest.is_zero() {
                total += &(wt * &rest);
            }
        }
        memo.insert((p, mask), total.clone());
        total
    }
    rec(0, 0, letters, &shape, full, &mut HashMap::new())
}

/// Subwords of `lw` reading a Sylvester word of `f`, depth-first.
pub fn forest_subwords(lw: &LongWord, f: &IndexedForest) -> Vec<Subword> {
    let mut out = Vec::new();
    if f.is_empty() {
        out.push(Subword::empty());
        return out;
    }
    let shape = SylvesterShape::new(f);
    let full = shape.full();
    let mut cur = Vec::new();
    fn rec(p: usize, mask: u64, lw: &LongWord, shape: &SylvesterShape, full: u64, cur: &mut Vec<usize>, out: &mut Vec<Subword>) {
        if mask == full {
            out.push(Subword { positions: cur.clone() });
            return;
        }
        let need = (full & !mask).count_ones() as usize;
        if lw.len() - p < need {
            return;
        }
        let l = lw.letter(p);
        if let Some(b) = shape.admissible(l.value, mask) {
            cur.push(p);
            rec(p + 1, mask | 1u64 << b, lw, shape, full, cur, out);
            cur.pop();
        }
        rec(p + 1, mask, lw, shape, full, cur, out);
    }
    rec(0, 0, lw, &shape, full, &mut cur, &mut out);
    out.sort();
    out
}

/// Long word size used for a forest: its largest label.
pub fn forest_word_size(f: &IndexedForest) -> u32 {
    f.max_label().max(1)
}

fn forest_cache() -> &'static RwLock<HashMap<IndexedForest, Arc<Poly>>> {
    static CACHE: OnceLock<RwLock<HashMap<IndexedForest, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The double forest polynomial `P_F`.
pub fn forest_poly(f: &IndexedForest) -> Arc<Poly> {
    if let Some(p) = forest_cache().read().expect("cache").get(f) {
        return p.clone();
    }
    let lw = LongWord::new(forest_word_size(f));
    let p = Arc::new(sylvester_subword_gf(&lw.weighted(), f));
    forest_cache().write().expect("cache").insert(f.clone(), p.clone());
    p
}

/// `P_F` as a sum of products of `y`/`z` factors, one term per subword.
pub fn forest_poly_factored(f: &IndexedForest) -> String {
    let lw = LongWord::new(forest_word_size(f));
    forest_subwords(&lw, f)
        .iter()
        .map(|s| s.factor_string(&lw))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The double fundamental quasisymmetric polynomial of `c`.
pub fn double_fundamental(c: &PaddedComposition) -> Arc<Poly> {
    forest_poly(&c.zigzag())
}

/// Long word size used for `w`: `w ∈ S_{n+1}`.
pub fn schubert_word_size(w: &Permutation) -> u32 {
    w.n().saturating_sub(1).max(1)
}

/// The double Schubert polynomial from reduced subwords of the long word.
pub fn schubert_poly(w: &Permutation) -> Poly {
    let lw = LongWord::new(schubert_word_size(w));
    reduced_subword_gf(&lw.weighted(), w)
}

/// Reduced subwords of the long word for `w`.
pub fn schubert_subwords(w: &Permutation) -> Vec<Subword> {
    let lw = LongWord::new(schubert_word_size(w));
    reduced_subwords(&lw.values(), w)
        .into_iter()
        .map(|positions| Subword { positions })
        .collect()
}

/// `ev_σ P_F` as a sum over Sylvester subwords of a noncrossing reduced word.
pub fn ajs_billey_forest(f: &IndexedForest, sigma: &NoncrossingPerm, omega: &[u32]) -> Result<Poly> {
    if !is_nc_reduced_word(sigma, omega) {
        return Err(Error::NotNcReduced(omega.to_vec(), sigma.to_string()));
    }
    Ok(sylvester_subword_gf(&ajs_weights(omega), f))
}

/// `ev_σ P_F` at `σ = ForToNC(F)` as a product over `InvNC(σ)`.
pub fn own_perm_eval(f: &IndexedForest) -> Poly {
    let n = f.max_support().max(1);
    let sigma = for_to_nc(f, n).expect("forest supported on its own support");
    inv_nc(&sigma)
        .into_iter()
        .map(|(a, b)| Poly::t_diff(sigma.apply(a), sigma.apply(b)))
        .product()
}

/// `Σ x_{i_1}⋯x_{i_m}` over `1 ≤ i_1 ≤ ⋯ ≤ i_m ≤ n` strict at `Set(c)`.
pub fn fundamental_monomial_oracle(c: &PaddedComposition) -> Poly {
    let n = c.n() as u32;
    let m = c.size() as usize;
    let strict = c.set();
    let mut total = Poly::zero();
    let mut idx = Vec::with_capacity(m);
    fn rec(n: u32, m: usize, strict: &BTreeSet<u32>, idx: &mut Vec<u32>, total: &mut Poly) {
        if idx.len() == m {
            *total += &idx.iter().map(|&i| Poly::x(i)).product::<Poly>();
            return;
        }
        let lo = match idx.last() {
            None => 1,
            Some(&prev) if strict.contains(&(idx.len() as u32)) => prev + 1,
            Some(&prev) => prev,
        };
        for i in lo..=n {
            idx.push(i);
            rec(n, m, strict, idx, total);
            idx.pop();
        }
    }
    rec(n, m, &strict, &mut idx, &mut total);
    total
}

/// Which tile set a diagram uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VineMode {
    Forest,
    Schubert,
}

pub const GLYPH_CROSS: char = '┼';
pub const GLYPH_ODD_ELBOW: char = '╯';
pub const GLYPH_EVEN_ELBOW: char = '╭';
pub const GLYPH_TEE: char = '┬';
pub const GLYPH_BAR: char = '─';
pub const GLYPH_OUTSIDE: char = '·';

/// Tile legend for help output.
pub const TILE_LEGEND: &str = "\
rows: for each syllable k, an unbarred row then a barred row; column j holds value j
┼  selected box (schubert mode): strands cross
┬  selected box (forest mode): a node joins two strands
─  unselected box above a ┬ in the same column (forest mode)
╯  unselected box in an unbarred row
╭  unselected box in a barred row
·  no box
cells are separated by single spaces, rows by newlines";

fn row_of(l: &Letter) -> usize {
    2 * (l.syllable as usize - 1) + usize::from(l.barred)
}

/// Text vine diagram of a subword.
pub fn render_vine(lw: &LongWord, sub: &Subword, mode: VineMode) -> Result<String> {
    let n = lw.n() as usize;
    let rows = 2 * n - 1;
    let mut grid = vec![vec![GLYPH_OUTSIDE; n]; rows];
    for l in lw.letters() {
        grid[row_of(l)][(l.value - 1) as usize] = if l.barred { GLYPH_EVEN_ELBOW } else { GLYPH_ODD_ELBOW };
    }
    let mut tee_row: Vec<Option<usize>> = vec![None; n];
    for &p in sub.positions() {
        let l = lw.letter(p);
        let col = (l.value - 1) as usize;
        match mode {
            VineMode::Schubert => grid[row_of(l)][col] = GLYPH_CROSS,
            VineMode::Forest => {
                if tee_row[col].is_some() {
                    return Err(Error::ColumnMultiplicity(l.value));
                }
                tee_row[col] = Some(row_of(l));
                grid[row_of(l)][col] = GLYPH_TEE;
            }
        }
    }
    if mode == VineMode::Forest {
        for (col, r) in tee_row.iter().enumerate() {
            if let Some(r) = *r {
                for row in grid.iter_mut().take(r) {
                    if row[col] != GLYPH_OUTSIDE {
                        row[col] = GLYPH_BAR;
                    }
                }
            }
        }
    }
    Ok(grid
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// Parses a diagram back into its long word and selected subword.
pub fn parse_vine(text: &str) -> Result<(LongWord, Subword, VineMode)> {
    let rows: Vec<Vec<char>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.chars().filter(|c| *c != ' ').collect())
        .collect();
    if rows.is_empty() || rows.len() % 2 == 0 {
        return Err(Error::Parse { pos: 0, msg: "a diagram has an odd number of rows".into() });
    }
    let n = rows.len().div_ceil(2);
    let lw = LongWord::new(n as u32);
    let mut positions = Vec::new();
    let (mut tees, mut crosses) = (false, false);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse { pos: r, msg: format!("row {} has {} cells, expected {n}", r + 1, row.len()) });
        }
        for (col, &ch) in row.iter().enumerate() {
            let syllable = (r / 2 + 1) as u32;
            let barred = r % 2 == 1;
            let pos = lw.position(syllable, col as u32 + 1, barred);
            match (ch, pos) {
                (GLYPH_OUTSIDE, None) => {}
                (GLYPH_ODD_ELBOW | GLYPH_EVEN_ELBOW | GLYPH_BAR, Some(_)) => {}
                (GLYPH_CROSS | GLYPH_TEE, Some(p)) => {
                    tees |= ch == GLYPH_TEE;
                    crosses |= ch == GLYPH_CROSS;
                    positions.push(p);
                }
                _ => {
                    return Err(Error::Parse {
                        pos: r,
                        msg: format!("unexpected '{ch}' at row {}, column {}", r + 1, col + 1),
                    })
                }
            }
        }
    }
    if tees && crosses {
        return Err(Error::Parse { pos: 0, msg: "diagram mixes forest and schubert tiles".into() });
    }
    let mode = if crosses { VineMode::Schubert } else { VineMode::Forest };
    Ok((lw.clone(), Subword::new(&lw, positions)?, mode))
}

/// Follows each strand from the bottom through the crossings, last letter
/// first; entry `i - 1` is where bottom column `i` ends at the top.
pub fn trace_strands(word: &[u32], n: u32) -> Vec<u32> {
    (1..=n)
        .map(|i| {
            word.iter().rev().fold(i, |p, &a| {
                if p == a {
                    a + 1
                } else if p == a + 1 {
                    a
                } else {
                    p
                }
            })
        })
        .collect()
}
