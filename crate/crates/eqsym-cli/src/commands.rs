use std::collections::BTreeMap;
use std::io::Read;

use eqsym::noncrossing::{
    canonical_long_word, canonical_words, deplete, for_to_nc, inv_nc, nc_descents, nc_equivalence_classes, nc_reduced_words,
    nc_to_for, vert_code,
};
use eqsym::star::{expand_schubert_graham, extract, multiply_forests_graham, ForestProduct};
use eqsym::symgroup::{schubert_dd, schubert_pipedream};
use eqsym::tables::{
    check_table1, check_table2, check_table3, fundamental_product_lower, fundamental_row_string, report,
    schubert_row_string, RowCheck,
};
use eqsym::vine::{
    forest_poly_factored, forest_subwords, forest_word_size, parse_vine, render_vine, schubert_subwords, schubert_word_size,
    VineMode,
};
use eqsym::{
    forest_poly, parse_poly, schubert_poly, DepletedAlphabet, Error, IndexedForest, LongWord, NoncrossingPerm,
    PaddedComposition, Permutation, Poly, Result,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::format::*;
use crate::{CheckCmd, CliConfig, Cmd, EvaluateArgs, ExpandCmd, Format, Method, NcCmd, VineCmd};

pub struct Output {
    pub text: String,
    /// A self-check failed.
    pub mismatch: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        let text = if text.is_empty() || text.ends_with('\n') { text } else { text + "\n" };
        Output { text, mismatch: false }
    }
}

fn pick(cfg: &CliConfig, plain: String, json: impl FnOnce() -> Value, tsv: Option<String>, latex_text: Option<String>) -> String {
    match cfg.format {
        Format::Plain => plain,
        Format::Json => serde_json::to_string_pretty(&json()).expect("json") + "\n",
        Format::Tsv => tsv.unwrap_or(plain),
        Format::Latex => latex_text.unwrap_or_else(|| latex(&plain)),
    }
}

fn poly_out(cfg: &CliConfig, p: &Poly, factored: Option<String>) -> String {
    let plain = match (&factored, cfg.factored_style) {
        (Some(f), true) => f.clone(),
        _ => p.to_string(),
    };
    pick(
        cfg,
        plain.clone(),
        || {
            let mut v = poly_json(p);
            if let Some(f) = factored.filter(|_| cfg.factored_style) {
                v["factored"] = Value::String(f);
            }
            v
        },
        None,
        Some(latex(&plain)),
    )
}

fn nc(s: &str) -> Result<NoncrossingPerm> {
    s.parse()
}

fn perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn forest(s: &str) -> Result<IndexedForest> {
    s.parse()
}

fn bounded(n: u32, cfg: &CliConfig) -> Result<()> {
    if n > cfg.nmax {
        return Err(Error::BoundExceeded { n: n as usize, bound: cfg.nmax as usize });
    }
    Ok(())
}

pub fn run(cmd: &Cmd, cfg: &CliConfig) -> Result<Output> {
    match cmd {
        Cmd::ForestPoly { forest: code } => {
            let f = forest(code)?;
            let fact = if f.is_empty() { "1".to_string() } else { forest_poly_factored(&f) };
            Ok(Output::ok(poly_out(cfg, &forest_poly(&f), Some(fact))))
        }
        Cmd::Schubert { perm: w, method } => {
            let w = perm(w)?;
            let p = match method {
                Method::Vine => schubert_poly(&w),
                Method::Dd => (*schubert_dd(&w)).clone(),
                Method::Pipedream => schubert_pipedream(&w),
            };
            let lw = LongWord::new(schubert_word_size(&w));
            let fact = join(schubert_subwords(&w).iter().map(|s| s.factor_string(&lw)), " + ");
            let fact = if fact.is_empty() || w.length() == 0 { "1".into() } else { fact };
            Ok(Output::ok(poly_out(cfg, &p, Some(fact))))
        }
        Cmd::Evaluate(args) => evaluate(args, cfg),
        Cmd::Expand(e) => expand(e, cfg),
        Cmd::Graham { poly } => {
            let p = parse_poly(poly)?;
            let g = p.graham_positive()?;
            let verdict = if g.positive { "positive" } else { "not positive" };
            let plain = format!("{verdict}\ncertificate: {}\n", g.certificate);
            let text = pick(
                cfg,
                plain,
                || json!({"poly": poly_json(&p), "graham_positive": g.positive, "certificate": g.certificate.to_string()}),
                Some(format!("{p}\t{}\t{}\n", g.positive, g.certificate)),
                Some(format!("{} & {} \\\\\n", latex(&p.to_string()), latex(&g.certificate.to_string()))),
            );
            Ok(Output { text, mismatch: !g.positive })
        }
        Cmd::Nc(c) => nc_cmd(c, cfg),
        Cmd::Vine(v) => vine(v, cfg),
        Cmd::Tables { which } => tables(*which, cfg),
        Cmd::Check(CheckCmd::Random { count }) => check_random(*count, cfg),
    }
}

fn evaluate(a: &EvaluateArgs, cfg: &CliConfig) -> Result<Output> {
    let p: Poly = if let Some(f) = &a.target.forest {
        (*forest_poly(&forest(f)?)).clone()
    } else if let Some(w) = &a.target.schubert {
        schubert_poly(&perm(w)?)
    } else {
        parse_poly(a.target.poly.as_deref().unwrap_or_default())?
    };
    let v = if let Some(s) = &a.point.perm {
        let s = perm(s)?;
        p.evaluate_perm(&s.padded(s.n()))
    } else {
        let list = a.point.deplete.as_deref().unwrap_or_default();
        let mut removed = Vec::new();
        for (k, part) in list.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
            removed.push(part.parse::<u32>().map_err(|_| Error::Parse {
                pos: k,
                msg: format!("bad index {part:?}"),
            })?);
        }
        p.evaluate_depleted(&DepletedAlphabet::new(removed))
    };
    Ok(Output::ok(poly_out(cfg, &v, None)))
}

fn expand(e: &ExpandCmd, cfg: &CliConfig) -> Result<Output> {
    let text = match e {
        ExpandCmd::Schubert { perm: w } => {
            let (m, _) = expand_schubert_graham(&perm(w)?);
            certified(cfg, &m)
        }
        ExpandCmd::Product { f, g } => {
            let (m, _) = multiply_forests_graham(&forest(f)?, &forest(g)?);
            certified(cfg, &m)
        }
        ExpandCmd::Monomial { poly } => {
            let m = extract(&parse_poly(poly)?);
            let row = schubert_row_string(&m);
            pick(
                cfg,
                row.clone() + "\n",
                || {
                    Value::Array(
                        m.iter().map(|(f, c)| json!({"forest": forest_json(f), "coeff": poly_json(c)})).collect(),
                    )
                },
                Some(coeff_tsv(&m)),
                Some(latex(&row) + "\n"),
            )
        }
        ExpandCmd::Fundamental { c, d } => {
            let c: PaddedComposition = c.parse()?;
            let d: PaddedComposition = d.parse()?;
            let m = fundamental_product_lower(&mut ForestProduct::new(), &c, &d);
            let row = fundamental_row_string(&m);
            pick(
                cfg,
                row.clone() + "\n",
                || {
                    Value::Array(
                        m.iter().map(|(e, k)| json!({"composition": e.to_string(), "coeff": poly_json(k)})).collect(),
                    )
                },
                Some(m.iter().map(|(e, k)| format!("{e}\t{k}\n")).collect()),
                Some(format!("{c} & {d} & {} \\\\\n", latex(&row))),
            )
        }
    };
    Ok(Output::ok(text))
}

fn certified(cfg: &CliConfig, m: &BTreeMap<IndexedForest, eqsym::star::CertifiedCoeff>) -> String {
    let row = schubert_row_string(&plain_coeffs(m));
    pick(cfg, row.clone() + "\n", || certified_json(m), Some(certified_tsv(m)), Some(latex(&row) + "\n"))
}

fn nc_cmd(c: &NcCmd, cfg: &CliConfig) -> Result<Output> {
    let text = match c {
        NcCmd::Classes { n } => {
            let classes = nc_equivalence_classes(*n, cfg.nmax as usize)?;
            let parts: Vec<String> = classes
                .iter()
                .enumerate()
                .map(|(k, cl)| {
                    if k == 0 {
                        format!("NC{n}")
                    } else {
                        format!("{{{}}}", join(cl.iter().map(|p| one_line(p, *n)), ","))
                    }
                })
                .collect();
            pick(
                cfg,
                parts.join(" | ") + "\n",
                || {
                    Value::Array(
                        classes
                            .iter()
                            .map(|cl| Value::Array(cl.iter().map(|p| Value::String(one_line(p, *n))).collect()))
                            .collect(),
                    )
                },
                Some(classes.iter().map(|cl| join(cl.iter().map(|p| one_line(p, *n)), "\t") + "\n").collect()),
                None,
            )
        }
        NcCmd::Descents { perm } => {
            let d = nc_descents(&nc(perm)?);
            pick(cfg, join(d.iter(), " ") + "\n", || json!(d), None, None)
        }
        NcCmd::Rednc { perm } => {
            let s = nc(perm)?;
            bounded(s.n(), cfg)?;
            let words = nc_reduced_words(&s);
            pick(
                cfg,
                words.iter().map(|w| join(w.iter(), " ") + "\n").collect(),
                || json!(words),
                Some(words.iter().map(|w| join(w.iter(), "\t") + "\n").collect()),
                None,
            )
        }
        NcCmd::Vert { perm } => {
            let v = vert_code(&nc(perm)?);
            pick(cfg, join(v.iter(), " ") + "\n", || json!(v), None, None)
        }
        NcCmd::ForToNc { forest: f, n } => {
            let f = forest(f)?;
            let n = n.unwrap_or_else(|| f.max_support().max(1));
            let s = for_to_nc(&f, n)?;
            pick(cfg, format!("{s}\n"), || json!({"perm": s.to_string(), "blocks": s.block_string()}), None, None)
        }
        NcCmd::ToForest { perm } => {
            let f = nc_to_for(&nc(perm)?);
            pick(cfg, format!("{f}\n"), || forest_json(&f), None, None)
        }
        NcCmd::Inv { perm } => {
            let inv = inv_nc(&nc(perm)?);
            pick(
                cfg,
                join(inv.iter().map(|(a, b)| format!("({a},{b})")), " ") + "\n",
                || json!(inv.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()),
                Some(inv.iter().map(|(a, b)| format!("{a}\t{b}\n")).collect()),
                None,
            )
        }
        NcCmd::Blocks { perm } => {
            let s = nc(perm)?;
            pick(cfg, s.block_string() + "\n", || json!(s.blocks()), None, None)
        }
        NcCmd::Canonical { perm } => {
            let s = nc(perm)?;
            let lw = canonical_long_word(s.n());
            let (a, b, c) = canonical_words(&s);
            let named = [("ncrmin", a), ("sylcont", b), ("sylmin", c)];
            pick(
                cfg,
                named.iter().map(|(k, w)| format!("{k}\t{}\n", join(w.values(&lw), " "))).collect(),
                || {
                    Value::Object(
                        named
                            .iter()
                            .map(|(k, w)| (k.to_string(), json!({"values": w.values(&lw), "positions": w.positions()})))
                            .collect(),
                    )
                },
                None,
                None,
            )
        }
        NcCmd::Deplete { perm, a } => {
            let d = deplete(&nc(perm)?, *a)?;
            pick(cfg, format!("{d}\n"), || json!(d.to_string()), None, None)
        }
    };
    Ok(Output::ok(text))
}

fn vine(v: &VineCmd, cfg: &CliConfig) -> Result<Output> {
    let text = match v {
        VineCmd::Render { forest: f, schubert } => {
            let (lw, subs, mode) = if let Some(f) = f {
                let f = forest(f)?;
                let lw = LongWord::new(forest_word_size(&f));
                let subs = forest_subwords(&lw, &f);
                (lw, subs, VineMode::Forest)
            } else {
                let w = perm(schubert.as_deref().unwrap_or_default())?;
                (LongWord::new(schubert_word_size(&w)), schubert_subwords(&w), VineMode::Schubert)
            };
            let mut items = Vec::new();
            for s in &subs {
                items.push((s, render_vine(&lw, s, mode)?));
            }
            let plain = join(
                items.iter().map(|(s, d)| format!("# {} [{}]\n{d}\n", label(&lw, s), join(s.positions(), " "))),
                "\n",
            );
            pick(
                cfg,
                plain,
                || {
                    Value::Array(
                        items
                            .iter()
                            .map(|(s, d)| json!({"positions": s.positions(), "factors": label(&lw, s), "diagram": d}))
                            .collect(),
                    )
                },
                Some(items.iter().map(|(s, _)| format!("{}\t{}\n", join(s.positions(), ","), label(&lw, s))).collect()),
                None,
            )
        }
        VineCmd::LongWord { n } => {
            bounded(*n, cfg)?;
            let lw = LongWord::new(*n);
            pick(cfg, format!("{lw}\n"), || json!(lw.values()), Some(join(lw.values(), "\t") + "\n"), None)
        }
        VineCmd::Parse => {
            let mut input = String::new();
            std::io::stdin().read_to_string(&mut input).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
            let (lw, s, mode) = parse_vine(input.trim_end_matches('\n'))?;
            let mode = match mode {
                VineMode::Forest => "forest",
                VineMode::Schubert => "schubert",
            };
            pick(
                cfg,
                format!("{mode}\npositions\t{}\nvalues\t{}\nfactors\t{}\n", join(s.positions(), " "), join(s.values(&lw), " "), label(&lw, &s)),
                || json!({"mode": mode, "n": lw.n(), "positions": s.positions(), "values": s.values(&lw)}),
                None,
                None,
            )
        }
    };
    Ok(Output::ok(text))
}

fn label(lw: &LongWord, s: &eqsym::Subword) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s.factor_string(lw)
    }
}

fn tables(which: u8, cfg: &CliConfig) -> Result<Output> {
    let checks: Vec<RowCheck> = match which {
        1 => check_table1()?,
        2 => check_table2()?,
        _ => check_table3()?,
    };
    let bad = checks.iter().filter(|c| !c.ok).count();
    let summary = format!("{}/{} rows match\n", checks.len() - bad, checks.len());
    let text = pick(
        cfg,
        report(&checks) + &summary,
        || {
            Value::Array(
                checks
                    .iter()
                    .map(|c| json!({"label": c.label, "ok": c.ok, "computed": c.computed, "expected": c.expected}))
                    .collect(),
            )
        },
        Some(checks.iter().map(|c| format!("{}\t{}\n", c.label, c.computed)).collect()),
        Some(checks.iter().map(|c| format!("{} & {} \\\\\n", c.label, latex(&c.computed))).collect()),
    );
    Ok(Output { text, mismatch: bad > 0 })
}

fn random_positive(rng: &mut StdRng, degree: u32) -> Poly {
    let mut c = Poly::constant(rng.gen_range(1..=3));
    for _ in 0..degree {
        let a = rng.gen_range(1..=4);
        c = &c * &Poly::t_diff(rng.gen_range(a + 1..=6), a);
    }
    c
}

/// Builds `Σ a_F P_F` with Graham-positive `a_F` and recovers the `a_F`.
fn check_random(count: usize, cfg: &CliConfig) -> Result<Output> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let forests = IndexedForest::up_to_size(4, cfg.nmax.min(4) as usize);
    let mut failures = Vec::new();
    for k in 0..count {
        let mut target: BTreeMap<IndexedForest, Poly> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let f = forests[rng.gen_range(0..forests.len())].clone();
            let d = rng.gen_range(0..=4 - f.size());
            *target.entry(f).or_insert_with(Poly::zero) += &random_positive(&mut rng, d);
        }
        target.retain(|_, c| !c.is_zero());
        let f: Poly = target.iter().map(|(g, c)| c * &*forest_poly(g)).sum();
        let got = extract(&f);
        let certified = got.values().all(|c| {
            c.graham_positive().map(|g| g.positive && g.certificate.to_poly() == *c).unwrap_or(false)
        });
        if got != target || !certified {
            failures.push((k, f));
        }
    }
    let ok = count - failures.len();
    let mut plain = format!("{ok}/{count} round trips (seed {})\n", cfg.seed);
    for (k, f) in &failures {
        plain += &format!("failed case {k}: {f}\n");
    }
    let text = pick(
        cfg,
        plain,
        || json!({"seed": cfg.seed, "count": count, "passed": ok, "failed": failures.iter().map(|(k, _)| k).collect::<Vec<_>>()}),
        None,
        None,
    );
    Ok(Output { text, mismatch: !failures.is_empty() })
}
