//! Text helpers for the four output formats.

use std::collections::BTreeMap;

use eqsym::star::CertifiedCoeff;
use eqsym::tables::forest_name;
use eqsym::{IndexedForest, Permutation, Poly};
use serde_json::{json, Value};

/// One-line notation padded to `n`; comma separated past 9.
pub fn one_line(p: &Permutation, n: u32) -> String {
    let line = p.padded(n.max(p.n()));
    if line.len() <= 9 {
        line.iter().map(|a| a.to_string()).collect()
    } else {
        line.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Plain polynomial or combination text to LaTeX.
pub fn latex(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            '*' => k += 1,
            '^' => {
                let start = k + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                out.push_str("^{");
                out.extend(&chars[start..end]);
                out.push('}');
                k = end;
            }
            'x' | 't' | 'y' | 'z' | 'd' | 'P' | 'F' if k + 1 < chars.len() && chars[k + 1] == '[' => {
                let close = chars[k..].iter().position(|&ch| ch == ']').map_or(chars.len(), |p| k + p);
                let inner: String = chars[k + 2..close].iter().collect();
                out.push(c);
                out.push_str("_{");
                out.push_str(&inner.replace('.', "\\cdot "));
                out.push('}');
                k = close + 1;
            }
            'x' | 't' | 'y' | 'z' | 'd' if k + 1 < chars.len() && chars[k + 1].is_ascii_digit() => {
                let mut end = k + 1;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                out.push(c);
                out.push_str("_{");
                out.extend(&chars[k + 1..end]);
                out.push('}');
                k = end;
            }
            _ => {
                out.push(c);
                k += 1;
            }
        }
    }
    out
}

pub fn forest_json(f: &IndexedForest) -> Value {
    json!({
        "code": f.to_string(),
        "factorization": f.factorization_string(),
    })
}

pub fn poly_json(p: &Poly) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_json() })
}

pub fn certified_json(m: &BTreeMap<IndexedForest, CertifiedCoeff>) -> Value {
    Value::Array(
        m.iter()
            .map(|(f, c)| {
                json!({
                    "forest": forest_json(f),
                    "coeff": poly_json(&c.coeff),
                    "graham_positive": c.positive,
                    "certificate": c.certificate.to_string(),
                })
            })
            .collect(),
    )
}

pub fn coeff_tsv(m: &BTreeMap<IndexedForest, Poly>) -> String {
    m.iter().map(|(f, c)| format!("{}\t{}\t{c}\n", f, forest_name(f))).collect()
}

pub fn certified_tsv(m: &BTreeMap<IndexedForest, CertifiedCoeff>) -> String {
    m.iter()
        .map(|(f, c)| format!("{}\t{}\t{}\t{}\n", f, forest_name(f), c.coeff, c.certificate))
        .collect()
}

pub fn plain_coeffs(m: &BTreeMap<IndexedForest, CertifiedCoeff>) -> BTreeMap<IndexedForest, Poly> {
    m.iter().map(|(k, v)| (k.clone(), v.coeff.clone())).collect()
}
