use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use serde_json::Value;
use socle::commands::run;
use socle::parse::{parse_exprs, parse_ring};
use socle::Exit;
use socle_core::{Monomial, Term};

fn socle(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_socle")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn with_stdin(args: &[&str], input: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn example_ring_report() {
    let (code, v) = socle(&["check", "example_d3"]);
    assert_eq!(code, 0);
    assert_eq!(ints(&v["filtration"]["dims"]), vec![1, 3]);
    assert_eq!(ints(&v["r"]), vec![0, 1, 0, 1]);
    assert_eq!(v["depth"], 1);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["seq_cm"], true);
    let block = &v["blocks"][0];
    assert_eq!(block["adic_depth"], 2);
    assert_eq!(block["verdicts"]["main1"]["verdict"], "holds");
    assert!(block["verdicts"]["main1"]["per_j"].is_array());
    assert!(block["verdicts"]["coe"]["comparisons"].is_array());
    for key in ["q", "I", "adic_order", "distinguished", "ir_q", "e_q", "e_I", "ir_values", "g", "f", "f_q"] {
        assert!(!block[key].is_null(), "missing {key}");
    }
}

#[test]
fn two_planes_at_depth_one_matches_closed_forms() {
    // e(q) and e(m) computed by hand for k[x,y] glued to k[u,v] at the origin
    let (code, v) = socle(&["check", "twoplanes", "--depth", "1", "--criteria", "main1"]);
    assert_eq!(code, 0);
    let block = &v["blocks"][0];
    assert_eq!(ints(&block["e_q"]), vec![2, -1, 0]);
    assert_eq!(ints(&block["e_I"]), vec![2, 0, -1]);
    assert_eq!(ints(&v["r"]), vec![0, 1, 2]);
}

#[test]
fn failing_criterion_sets_exit_one() {
    let (code, v) = socle(&["check", "twoplanes", "--depth", "2", "--criteria", "main1"]);
    assert_eq!(code, 1);
    assert_eq!(v["blocks"][0]["verdicts"]["main1"]["verdict"], "fails");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(socle(&["check", "no-such-ring"]).0, 2);
    assert_eq!(socle(&["frobnicate"]).0, 2);
    let (code, err) = with_stdin(&["filtration", "-"], "vars x y\nideal x y\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 9"), "{err}");
    let (code, err) = with_stdin(&["filtration", "-"], "vars x y\nideal x^2 + y\n");
    assert_eq!(code, 2);
    assert!(err.contains("not homogeneous"), "{err}");
}

#[test]
fn oracle_agrees_on_monomial_rings() {
    for name in ["three_lines", "embedded_line", "twoplanes_embedded"] {
        let (code, v) = socle(&["oracle", name]);
        assert_eq!(code, 0, "{name}");
        assert!(v.is_object());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run(["socle", "check", "embedded_line", "--depth", "1,2", "--seed", "7"]);
    let b = run(["socle", "check", "embedded_line", "--depth", "1,2", "--seed", "7"]);
    assert_eq!(a.exit, Exit::Success);
    assert_eq!(a, b);
    let c = run(["socle", "sop", "embedded_line", "--distinguished", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn text_format() {
    let out = run(["socle", "--format", "text", "filtration", "embedded_line"]);
    assert_eq!(out.exit, Exit::Success);
    assert!(out.stdout.contains("filtration: ell = 2, dims = [1, 2]"), "{}", out.stdout);
}

#[test]
fn named_parameter_ideal() {
    let (code, v) = socle(&["check", "regular", "--q", "q", "--criteria", "t12,ineq"]);
    assert_eq!(code, 0);
    let block = &v["blocks"][0];
    assert_eq!(ints(&block["e_q"]), vec![4, 0, 0]);
    assert_eq!(ints(&block["e_I"]), vec![4, 1, 0]);
    assert_eq!(block["verdicts"]["gorenstein"]["verdict"], "holds");
}

/// Terms of one homogeneous polynomial in three variables.
fn poly_text() -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    (0usize..4).prop_flat_map(|deg| {
        proptest::collection::vec((proptest::collection::vec(0usize..3, deg), 1u32..32003), 1..4).prop_map(|ts| {
            ts.into_iter()
                .map(|(vars, c)| {
                    let mut e = vec![0u32; 3];
                    for v in vars {
                        e[v] += 1;
                    }
                    (e, c)
                })
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rendered_rings_parse_back(gens in proptest::collection::vec(poly_text(), 0..4), p in prop_oneof![Just(2u32), Just(101), Just(32003)]) {
        let base = parse_ring(&format!("field {p}\nvars a b c\nideal\n"), None).unwrap();
        let polys: Vec<_> = gens
            .iter()
            .map(|ts| {
                base.ring.from_terms(
                    ts.iter()
                        .map(|(e, c)| Term { mono: Monomial::from_exponents(e).unwrap(), coeff: c % p })
                        .filter(|t| t.coeff != 0)
                        .collect(),
                )
            })
            .filter(|g| !g.is_zero())
            .collect();
        let text = polys.iter().map(|g| base.ring.display(g)).collect::<Vec<_>>().join(", ");
        prop_assert_eq!(&parse_exprs(&base.ring, &text).unwrap(), &polys);
        let mut rf = base.clone();
        rf.ideal = polys.clone();
        if !polys.is_empty() {
            rf.names = vec![("q".into(), polys)];
        }
        let again = parse_ring(&rf.render(), None).unwrap();
        prop_assert_eq!(again, rf);
    }
}

#[test]
fn small_characteristic_gives_the_same_invariants() {
    for name in ["twoplanes", "embedded_line"] {
        let (_, big) = socle(&["check", name, "--depth", "2"]);
        let (_, small) = socle(&["--p", "101", "check", name, "--depth", "2"]);
        for key in ["r", "betti", "depth", "seq_cm", "filtration"] {
            assert_eq!(big[key], small[key], "{name}: {key}");
        }
        for key in ["e_q", "e_I", "ir_q"] {
            assert_eq!(big["blocks"][0][key], small["blocks"][0][key], "{name}: {key}");
        }
    }
}
