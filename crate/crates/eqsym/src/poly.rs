//! Sparse polynomials with integer coefficients in two indexed families of
//! variables `x1, x2, ...` and `t1, t2, ...`, together with the substitution
//! operators used throughout the crate.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A single variable. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(u32),
    T(u32),
}

/// A monomial `x^a t^b`. `x[k]` is the exponent of `x_{k+1}`; trailing zeros
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    t: Vec<u32>,
}

fn set_exp(v: &mut Vec<u32>, idx: u32, e: u32) {
    let k = (idx - 1) as usize;
    if e == 0 {
        if k < v.len() {
            v[k] = 0;
            while v.last() == Some(&0) {
                v.pop();
            }
        }
        return;
    }
    if v.len() <= k {
        v.resize(k + 1, 0);
    }
    v[k] = e;
}

fn bump_exp(v: &mut Vec<u32>, idx: u32, e: u32) {
    if e == 0 {
        return;
    }
    let k = (idx - 1) as usize;
    if v.len() <= k {
        v.resize(k + 1, 0);
    }
    v[k] += e;
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for k in 0..n {
        let ea = a.get(k).copied().unwrap_or(0);
        let eb = b.get(k).copied().unwrap_or(0);
        match ea.cmp(&eb) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::one();
        m.bump(v, 1);
        m
    }

    pub fn from_exponents(
        x: impl IntoIterator<Item = (u32, u32)>,
        t: impl IntoIterator<Item = (u32, u32)>,
    ) -> Self {
        let mut m = Monomial::one();
        for (i, e) in x {
            m.bump(Var::X(i), e);
        }
        for (i, e) in t {
            m.bump(Var::T(i), e);
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        let (vec, i) = match v {
            Var::X(i) => (&self.x, i),
            Var::T(i) => (&self.t, i),
        };
        vec.get((i - 1) as usize).copied().unwrap_or(0)
    }

    fn bump(&mut self, v: Var, e: u32) {
        match v {
            Var::X(i) => bump_exp(&mut self.x, i, e),
            Var::T(i) => bump_exp(&mut self.t, i, e),
        }
    }

    fn set(&mut self, v: Var, e: u32) {
        match v {
            Var::X(i) => set_exp(&mut self.x, i, e),
            Var::T(i) => set_exp(&mut self.t, i, e),
        }
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.t.iter().sum::<u32>()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn is_x_free(&self) -> bool {
        self.x.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.t.is_empty()
    }

    /// Nonzero `(index, exponent)` pairs of the x-block.
    pub fn x_exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.x
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k as u32 + 1, e))
    }

    /// Nonzero `(index, exponent)` pairs of the t-block.
    pub fn t_exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.t
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k as u32 + 1, e))
    }

    /// All variables with their exponents, x-block first.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.x_exponents()
            .map(|(i, e)| (Var::X(i), e))
            .chain(self.t_exponents().map(|(i, e)| (Var::T(i), e)))
    }

    pub fn max_x(&self) -> u32 {
        self.x.len() as u32
    }

    pub fn max_t(&self) -> u32 {
        self.t.len() as u32
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (k, &e) in other.x.iter().enumerate() {
            bump_exp(&mut m.x, k as u32 + 1, e);
        }
        for (k, &e) in other.t.iter().enumerate() {
            bump_exp(&mut m.t, k as u32 + 1, e);
        }
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&self.x, &other.x))
            .then_with(|| lex_cmp(&self.t, &other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite set `A` of positive integers; `t_{i,A}` is `t` at the `i`-th
/// element of `N \ A`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DepletedAlphabet {
    removed: BTreeSet<u32>,
}

impl DepletedAlphabet {
    pub fn empty() -> Self {
        DepletedAlphabet::default()
    }

    pub fn new(removed: impl IntoIterator<Item = u32>) -> Self {
        DepletedAlphabet {
            removed: removed.into_iter().collect(),
        }
    }

    pub fn removed(&self) -> &BTreeSet<u32> {
        &self.removed
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.removed.contains(&a)
    }

    /// The `i`-th element (1-based) of the complement `N \ A`.
    pub fn nth_remaining(&self, i: u32) -> u32 {
        let mut k = i;
        for &a in &self.removed {
            if a <= k {
                k += 1;
            } else {
                break;
            }
        }
        k
    }
}

impl fmt::Display for DepletedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.removed.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// A sparse polynomial in `x` and `t` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExactPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
    max_x: u32,
    max_t: u32,
}

pub type Poly = ExactPolynomial;

impl ExactPolynomial {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::from_terms([(Monomial::one(), BigInt::from(c))])
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Poly::from_terms([(Monomial::one(), c)])
    }

    pub fn var(v: Var) -> Self {
        Poly::from_terms([(Monomial::var(v), BigInt::one())])
    }

    pub fn x(i: u32) -> Self {
        Poly::var(Var::X(i))
    }

    pub fn t(i: u32) -> Self {
        Poly::var(Var::T(i))
    }

    /// `x_i - t_j`.
    pub fn x_minus_t(i: u32, j: u32) -> Self {
        Poly::x(i) - Poly::t(j)
    }

    /// `t_b - t_a`.
    pub fn t_diff(b: u32, a: u32) -> Self {
        Poly::t(b) - Poly::t(a)
    }

    /// Builds a polynomial, merging equal monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly::from_map(map)
    }

    fn from_map(terms: BTreeMap<Monomial, BigInt>) -> Self {
        let max_x = terms.keys().map(|m| m.max_x()).max().unwrap_or(0);
        let max_t = terms.keys().map(|m| m.max_t()).max().unwrap_or(0);
        ExactPolynomial { terms, max_x, max_t }
    }

    fn from_hash(terms: HashMap<Monomial, BigInt>) -> Self {
        Poly::from_map(terms.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn max_x_index(&self) -> u32 {
        self.max_x
    }

    pub fn max_t_index(&self) -> u32 {
        self.max_t
    }

    pub fn is_x_free(&self) -> bool {
        self.max_x == 0
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_map(self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Poly {
        Poly::from_map(self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect())
    }

    /// Applies a variable-to-variable substitution. Distinct variables may be
    /// sent to the same variable; exponents then add up.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly {
        let mut out: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            for (v, e) in m.factors() {
                nm.bump(f(v), e);
            }
            *out.entry(nm).or_insert_with(BigInt::zero) += c;
        }
        Poly::from_hash(out)
    }

    /// General substitution: each variable for which `f` returns `Some(p)` is
    /// replaced by `p`; others are kept.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut cache: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut prod = Poly::from_bigint(c.clone());
            for (v, e) in m.factors() {
                match f(v) {
                    None => kept.bump(v, e),
                    Some(p) => {
                        let pe = cache.entry((v, e)).or_insert_with(|| p.pow(e));
                        prod = &prod * &*pe;
                    }
                }
            }
            for (k, a) in prod.terms {
                *acc.entry(k.mul(&kept)).or_insert_with(BigInt::zero) += a;
            }
        }
        Poly::from_hash(acc)
    }

    /// Relabels `t_k -> t_{k,A}` (the substitution `t -> t-hat_A`).
    pub fn relabel_t(&self, a: &DepletedAlphabet) -> Poly {
        if a.is_empty() {
            return self.clone();
        }
        self.rename(|v| match v {
            Var::T(k) => Var::T(a.nth_remaining(k)),
            x => x,
        })
    }

    /// Long division by the linear polynomial `v - c`; returns quotient and
    /// remainder (the latter is `self` with `v` replaced by `c`).
    pub fn div_linear(&self, v: Var, c: Var) -> (Poly, Poly) {
        assert_ne!(v, c, "divisor must be nonconstant");
        let mut q: HashMap<Monomial, BigInt> = HashMap::new();
        let mut r: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, a) in &self.terms {
            let k = m.exp(v);
            let mut rest = m.clone();
            rest.set(v, 0);
            for j in 0..k {
                let mut qm = rest.clone();
                qm.bump(v, j);
                qm.bump(c, k - 1 - j);
                *q.entry(qm).or_insert_with(BigInt::zero) += a;
            }
            let mut rm = rest;
            rm.bump(c, k);
            *r.entry(rm).or_insert_with(BigInt::zero) += a;
        }
        (Poly::from_hash(q), Poly::from_hash(r))
    }

    /// Exact division by `v - c`, panicking on a nonzero remainder.
    pub fn div_exact_linear(&self, v: Var, c: Var) -> Poly {
        let (q, r) = self.div_linear(v, c);
        assert!(r.is_zero(), "inexact division by {v:?} - {c:?}: remainder {r}");
        q
    }

    /// `R^-_{i,A}` (`plus = false`) or `R^+_{i,A}` (`plus = true`).
    pub fn r_shift(&self, i: u32, plus: bool, a: &DepletedAlphabet) -> Poly {
        let ti = Var::T(a.nth_remaining(i));
        self.rename(|v| match v {
            Var::X(j) if plus => {
                if j <= i {
                    Var::X(j)
                } else if j == i + 1 {
                    ti
                } else {
                    Var::X(j - 1)
                }
            }
            Var::X(j) => match j.cmp(&i) {
                Ordering::Less => Var::X(j),
                Ordering::Equal => ti,
                Ordering::Greater => Var::X(j - 1),
            },
            t => t,
        })
    }

    /// Swaps `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: u32) -> Poly {
        self.rename(|v| match v {
            Var::X(j) if j == i => Var::X(i + 1),
            Var::X(j) if j == i + 1 => Var::X(i),
            o => o,
        })
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: u32) -> Poly {
        let num = self - &self.swap_x(i);
        num.div_exact_linear(Var::X(i), Var::X(i + 1))
    }

    /// `E_{i,A} f = (R^+_{i,A} f - R^-_{i,A} f) / (x_i - t_{i,A})`.
    pub fn e_trim(&self, i: u32, a: &DepletedAlphabet) -> Poly {
        if self.max_x < i {
            return Poly::zero();
        }
        let num = &self.r_shift(i, true, a) - &self.r_shift(i, false, a);
        num.div_exact_linear(Var::X(i), Var::T(a.nth_remaining(i)))
    }

    /// `ev_sigma`: `x_i -> t_{sigma(i)}`, with `sigma` in one-line notation and
    /// fixing every index beyond its length.
    pub fn evaluate_perm(&self, one_line: &[u32]) -> Poly {
        self.rename(|v| match v {
            Var::X(i) => Var::T(one_line.get((i - 1) as usize).copied().unwrap_or(i)),
            t => t,
        })
    }

    /// `ev_A`: `x_i -> t_{i,A}`.
    pub fn evaluate_depleted(&self, a: &DepletedAlphabet) -> Poly {
        self.rename(|v| match v {
            Var::X(i) => Var::T(a.nth_remaining(i)),
            t => t,
        })
    }

    pub fn specialize_t_zero(&self) -> Poly {
        Poly::from_map(
            self.terms
                .iter()
                .filter(|(m, _)| m.t.is_empty())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// True iff `R^+_i f = R^-_i f` for `1 <= i < n`.
    pub fn is_equivariantly_quasisymmetric(&self, n: u32) -> Result<bool> {
        if self.max_x > n {
            return Err(Error::XIndexTooLarge(self.max_x, n));
        }
        let a = DepletedAlphabet::empty();
        Ok((1..n).all(|i| self.r_shift(i, true, &a) == self.r_shift(i, false, &a)))
    }

    /// Tests membership in `Z>=0[t2-t1, t3-t2, ...]`.
    pub fn graham_positive(&self) -> Result<GrahamCheck> {
        if !self.is_x_free() {
            return Err(Error::HasX(self.to_string()));
        }
        // Encoding inside the certificate: t1 stays t1, d_k is stored as x_k.
        let sub = self.substitute(|v| match v {
            Var::T(i) => {
                let mut p = Poly::t(1);
                for k in 1..i {
                    p += &Poly::x(k);
                }
                Some(p)
            }
            Var::X(_) => None,
        });
        let positive = sub.terms.iter().all(|(m, c)| m.t.is_empty() && !c.is_negative());
        Ok(GrahamCheck {
            positive,
            certificate: GrahamCertificate { expansion: sub },
        })
    }

    /// Canonical JSON form: a list of `{coeff, xexp, texp}` objects in
    /// decreasing monomial order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let xexp: serde_json::Map<String, Value> =
                    m.x_exponents().map(|(i, e)| (i.to_string(), json!(e))).collect();
                let texp: serde_json::Map<String, Value> =
                    m.t_exponents().map(|(i, e)| (i.to_string(), json!(e))).collect();
                json!({ "coeff": bigint_to_json(c), "xexp": xexp, "texp": texp })
            })
            .collect();
        Value::Array(terms)
    }

    pub fn from_json(v: &Value) -> Result<Poly> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: msg.to_string(),
        };
        let arr = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let coeff = match t.get("coeff") {
                Some(Value::Number(n)) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficient must be an integer"))?,
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coefficient")),
            };
            let read = |key: &str| -> Result<Vec<(u32, u32)>> {
                let mut out = Vec::new();
                if let Some(obj) = t.get(key) {
                    let obj = obj.as_object().ok_or_else(|| bad("exponent map must be an object"))?;
                    for (k, e) in obj {
                        let i: u32 = k.parse().map_err(|_| bad("bad variable index"))?;
                        let e = e.as_u64().ok_or_else(|| bad("bad exponent"))? as u32;
                        if i == 0 {
                            return Err(bad("variable indices are 1-based"));
                        }
                        out.push((i, e));
                    }
                }
                Ok(out)
            };
            terms.push((Monomial::from_exponents(read("xexp")?, read("texp")?), coeff));
        }
        Ok(Poly::from_terms(terms))
    }
}

fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => Value::String(c.to_string()),
    }
}

/// Result of the Graham positivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrahamCheck {
    pub positive: bool,
    pub certificate: GrahamCertificate,
}

/// The expansion of an x-free polynomial in `t1, d1, d2, ...` with
/// `d_k = t_{k+1} - t_k`. Internally the `x_k` slot holds `d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrahamCertificate {
    expansion: Poly,
}

impl GrahamCertificate {
    /// Terms as `(d-exponents, t1-exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<(u32, u32)>, u32, BigInt)> {
        self.expansion
            .terms()
            .rev()
            .map(|(m, c)| (m.x_exponents().collect(), m.exp(Var::T(1)), c.clone()))
            .collect()
    }

    /// Rebuilds the polynomial in `t` that this certificate expands.
    pub fn to_poly(&self) -> Poly {
        self.expansion.substitute(|v| match v {
            Var::X(k) => Some(Poly::t_diff(k + 1, k)),
            Var::T(_) => None,
        })
    }
}

impl fmt::Display for GrahamCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.expansion, &|v| match v {
            Var::X(k) => format!("d{k}"),
            Var::T(k) => format!("t{k}"),
        })
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, p: &Poly, name: &dyn Fn(Var) -> String) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for (v, e) in m.factors() {
            if e == 1 {
                factors.push(name(v));
            } else {
                factors.push(format!("{}^{}", name(v), e));
            }
        }
        write!(f, "{}", factors.join("*"))?;
    }
    Ok(())
}

fn default_name(v: Var) -> String {
    match v {
        Var::X(i) => format!("x{i}"),
        Var::T(i) => format!("t{i}"),
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, &default_name)
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            match self.terms.get_mut(m) {
                Some(a) => {
                    *a += c;
                    if a.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), c.clone());
                }
            }
        }
        self.max_x = self.terms.keys().map(|m| m.max_x()).max().unwrap_or(0);
        self.max_t = self.terms.keys().map(|m| m.max_t()).max().unwrap_or(0);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self += &(-rhs);
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_map(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Poly::from_hash(acc)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Text parser

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn index(&mut self) -> Result<u32> {
        match self.digits() {
            None => self.err("expected a variable index"),
            Some(d) => match d.parse::<u32>() {
                Ok(0) | Err(_) => self.err("variable indices are positive integers"),
                Ok(i) => Ok(i),
            },
        }
    }

    /// `y..`/`z..`: either two single digits or `[i,j]`.
    fn pair(&mut self) -> Result<(u32, u32)> {
        if self.src.get(self.pos) == Some(&b'[') {
            self.pos += 1;
            self.skip_ws();
            let i = self.index()?;
            if self.peek() != Some(b',') {
                return self.err("expected ','");
            }
            self.pos += 1;
            self.skip_ws();
            let j = self.index()?;
            if self.peek() != Some(b']') {
                return self.err("expected ']'");
            }
            self.pos += 1;
            return Ok((i, j));
        }
        let start = self.pos;
        let d = self.digits().unwrap_or("");
        if d.len() != 2 || d.contains('0') {
            self.pos = start;
            return self.err("expected two nonzero digits or [i,j]");
        }
        let b = d.as_bytes();
        Ok(((b[0] - b'0') as u32, (b[1] - b'0') as u32))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_digit() || b"xtyz(".contains(&c) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = match self.digits().map(|d| d.parse::<u32>()) {
                Some(Ok(e)) => e,
                _ => return self.err("expected a nonnegative integer exponent"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x(self.index()?))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Poly::t(self.index()?))
            }
            Some(b'y') => {
                self.pos += 1;
                let (i, j) = self.pair()?;
                Ok(Poly::x_minus_t(i, j))
            }
            Some(b'z') => {
                self.pos += 1;
                let (i, j) = self.pair()?;
                Ok(Poly::t_diff(j, i))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap_or("0");
                Ok(Poly::from_bigint(d.parse::<BigInt>().expect("digits")))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the text form. Besides `x3`, `t5`, integers, `^`, `*` and
/// parentheses, the shorthands `y_ij = x_i - t_j` and `z_ij = t_j - t_i` are
/// accepted as `y12` / `z12` or `y[10,2]`.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl FromStr for ExactPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
