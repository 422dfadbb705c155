use std::io::Write;
use std::process::{Command, Output, Stdio};

use eqsym::{parse_poly, Poly};

fn eqsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqsym")).args(args).output().expect("run eqsym")
}

fn stdout(args: &[&str]) -> String {
    let out = eqsym(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn poly(s: &str) -> Poly {
    parse_poly(s.trim()).unwrap()
}

#[test]
fn forest_polynomials() {
    assert_eq!(stdout(&["forest-poly", "(1)", "--factored-style"]).trim(), "y11");
    assert_eq!(stdout(&["forest-poly", "()"]).trim(), "1");
    let two = stdout(&["forest-poly", "(0,2)"]);
    let factored = stdout(&["forest-poly", "(0,2)", "--factored-style"]);
    assert_eq!(poly(&two), poly(&factored));
    assert_eq!(poly(&two), poly("y13y12+y13z12+y13y22+z13y22+y23y22"));
}

#[test]
fn schubert_methods_agree() {
    let v = stdout(&["schubert", "3142"]);
    assert_eq!(poly(&v), poly(&stdout(&["schubert", "3142", "--method", "dd"])));
    assert_eq!(poly(&v), poly(&stdout(&["schubert", "3142", "--method", "pipedream"])));
    assert_eq!(poly(&v), poly(&stdout(&["schubert", "3142", "--factored-style"])));
}

#[test]
fn evaluation() {
    let got = stdout(&["evaluate", "--forest", "(2,0,1)", "--perm", "4321"]);
    assert_eq!(poly(&got), poly("(t4-t1)(t4-t2)(t3-t1)"));
    assert_eq!(stdout(&["evaluate", "--poly", "x1*x2", "--deplete", "1"]).trim(), "t2*t3");
}

#[test]
fn expansions() {
    let m = stdout(&["expand", "monomial", "x1^3 - 3 x1^2 t1 + 3 x1 t1^2 - t1^3"]);
    assert_eq!(m.trim(), "P[1.1.1] + (-2*t1 + t2 + t3)*P[1.1] + (t1^2 - 2*t1*t2 + t2^2)*P[1]");
    assert_eq!(stdout(&["expand", "schubert", "321"]).trim(), "P[1.1.2] + (-t2 + t3)*P[1.2]");
    assert_eq!(stdout(&["expand", "product", "()", "(0,1)"]).trim(), "P[2]");
    assert_eq!(stdout(&["expand", "fundamental", "0001", "0001"]).trim(), "(-t4 + t5)*F[0001]");
    let tsv = stdout(&["expand", "schubert", "4321", "--format", "tsv"]);
    assert_eq!(tsv.lines().count(), 6);
}

#[test]
fn json_matches_plain() {
    let plain = stdout(&["expand", "schubert", "4321"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["expand", "schubert", "4321", "--format", "json"])).unwrap();
    let items = json.as_array().unwrap();
    assert_eq!(items.len(), 6);
    for it in items {
        assert!(it["graham_positive"].as_bool().unwrap());
        let fact = it["forest"]["factorization"].as_str().unwrap();
        assert!(plain.contains(&format!("P[{fact}]")));
        let coeff = Poly::from_json(&it["coeff"]["terms"]).unwrap();
        assert_eq!(coeff, poly(it["coeff"]["text"].as_str().unwrap()));
    }
}

#[test]
fn noncrossing_commands() {
    assert_eq!(stdout(&["nc", "classes", "3"]).trim(), "NC3 | {231}");
    assert_eq!(stdout(&["nc", "descents", "82154763"]).trim(), "2 4 6");
    assert_eq!(stdout(&["nc", "vert", "82154763"]).trim(), "1 2 1 3 2 3 2 0");
    assert_eq!(stdout(&["nc", "rednc", "82154763", "--nmax", "8"]).lines().count(), 336);
    assert_eq!(stdout(&["nc", "blocks", "82154763"]).trim(), "2/45/67/138");
    let f = stdout(&["nc", "to-forest", "4321"]);
    assert_eq!(stdout(&["nc", "for-to-nc", f.trim(), "--n", "4"]).trim(), "4321");
    let c = stdout(&["nc", "canonical", "4321"]);
    assert!(c.contains("ncrmin\t3 2 1 2 3 2"), "{c}");
}

#[test]
fn tables_self_verify() {
    for (k, rows) in [("1", 22), ("2", 32), ("3", 19)] {
        let out = stdout(&["tables", k]);
        assert!(out.ends_with(&format!("{rows}/{rows} rows match\n")), "table {k}");
        assert!(!out.contains("MISMATCH"));
    }
    let json: serde_json::Value = serde_json::from_str(&stdout(&["tables", "1", "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 22);
    assert!(stdout(&["tables", "2", "--format", "latex"]).contains("P_{1\\cdot 1\\cdot 2}"));
}

#[test]
fn vine_render_and_parse() {
    let out = stdout(&["vine", "render", "--forest", "(0,2,1)"]);
    let first: String = out.split("\n\n").next().unwrap().lines().skip(1).collect::<Vec<_>>().join("\n");
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqsym"))
        .args(["vine", "parse"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(first.as_bytes()).unwrap();
    let parsed = String::from_utf8(child.wait_with_output().unwrap().stdout).unwrap();
    assert!(parsed.starts_with("forest\n"));
    let header = out.lines().next().unwrap();
    let factors = parsed.lines().find_map(|l| l.strip_prefix("factors\t")).unwrap();
    assert!(header.contains(factors), "{header} / {factors}");
    assert!(stdout(&["vine", "long-word", "2"]).contains('|'));
}

#[test]
fn graham_and_random_checks() {
    assert!(stdout(&["graham", "t3-t1"]).starts_with("positive"));
    assert_eq!(eqsym(&["graham", "t1-t3"]).status.code(), Some(1));
    assert!(stdout(&["check", "random", "--count", "25", "--seed", "5"]).starts_with("25/25"));
}

#[test]
fn exit_codes() {
    assert_eq!(eqsym(&["forest-poly", "(1,"]).status.code(), Some(2));
    assert_eq!(eqsym(&["nc", "classes", "9"]).status.code(), Some(2));
    assert_eq!(eqsym(&["nc", "vert", "2413"]).status.code(), Some(2));
    assert_eq!(eqsym(&["evaluate", "--forest", "(1)"]).status.code(), Some(2));
    assert_eq!(eqsym(&["bogus"]).status.code(), Some(2));
    assert_eq!(eqsym(&["--help"]).status.code(), Some(0));
}
