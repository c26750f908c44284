//! End-to-end runs of the `reesag` binary.

use std::process::{Command, Output};

use serde_json::Value;

use reesag::agcheck::WitnessTriple;
use reesag::text::{parse_ideal, parse_poly};
use reesag::{PrimeField, Ring};

fn reesag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reesag")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = reesag(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

#[test]
fn agcheck_reports_a_witness_that_rechecks() {
    let (v, code) = json(&["agcheck", "--ideal", "ideal(x^2,x*y,y^2)", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "AlmostGorensteinWitness");
    let w = &v["witness"];
    let r = Ring::plane(PrimeField::default());
    let get = |k: &str| w[k].as_str().unwrap().to_string();
    let (i, j) = (parse_ideal(&r, &get("I")).unwrap(), parse_ideal(&r, &get("J")).unwrap());
    let (f, g, h) = (parse_poly(&r, &get("f")).unwrap(), parse_poly(&r, &get("g")).unwrap(), parse_poly(&r, &get("h")).unwrap());
    assert!(WitnessTriple::check(&i, &j, &f, &g, &h).unwrap().is_some());
}

#[test]
fn socle_of_cubes_is_not_almost_gorenstein() {
    let (v, code) = json(&["socle", "--Q", "ideal(x^3,y^3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "NotAlmostGorenstein");
    assert_eq!(v["result"]["socle"]["c"], "x^2*y^2");
}

#[test]
fn three_variable_reduction_number() {
    let (v, _) = json(&[
        "redno",
        "--Q",
        "ideal(x^2*y,y^2*z,z^2*x)",
        "--I",
        "ideal(x^2*y,y^2*z,z^2*x,x*y*z)",
        "--vars",
        "x,y,z",
    ]);
    assert_eq!(v["result"]["reduction_number"], 2);
}

#[test]
fn schema_has_the_documented_keys() {
    let (v, _) = json(&["gb", "--ideal", "ideal(x^2, y^2, x*y)"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["command", "params", "result", "warnings"]);
    assert_eq!(v["result"]["basis"], serde_json::json!(["y^2", "x*y", "x^2"]));
    let (v, _) = json(&["gb", "--ideal", "ideal(x)", "--timing"]);
    assert!(v["millis"].is_u64());
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let runs = [
        vec!["agcheck", "--ideal", "ideal(x^3, x^2*y, y^2)", "--seed", "7", "--json"],
        vec!["findred", "--ideal", "ideal(x^4, x*y, y^4)", "--seed", "3"],
        vec!["jointred", "--I", "ideal(x^2,x*y,y^2)", "--J", "ideal(x^3,y)", "--field", "q"],
        vec!["paper-suite", "--json"],
    ];
    for args in runs {
        let a = reesag(&args);
        let b = reesag(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(reesag(&["gb", "--ideal", "ideal()"]).status.code(), Some(2));
    assert_eq!(reesag(&["gb", "--ideal", "ideal(w)"]).status.code(), Some(2));
    assert_eq!(reesag(&["gb", "--ideal", "ideal(x)", "--field", "fp:4"]).status.code(), Some(2));
    assert_eq!(reesag(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(reesag(&["hypersurface", "--ell", "1", "--a", "z", "--b", "z"]).status.code(), Some(1));
    assert_eq!(reesag(&["findred", "--ideal", "ideal(x^2, y)", "--vars", "x,y"]).status.code(), Some(0));
    assert_eq!(reesag(&["agcheck", "--ideal", "ideal(x - 1, y)"]).status.code(), Some(1));
}

#[test]
fn syntax_errors_carry_a_position() {
    let (v, code) = json(&["nf", "--ideal", "ideal(x^2, y)", "--poly", "x + * y"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "E_SYNTAX");
    assert!(v["error"]["message"].as_str().unwrap().contains("position 4"));
}

#[test]
fn warnings_are_reported() {
    let (v, _) = json(&["agcheck", "--ideal", "ideal(x^3, y^2)"]);
    let w = v["warnings"].as_array().unwrap();
    assert!(w.iter().any(|s| s.as_str().unwrap().starts_with("not integrally closed")), "{w:?}");
    let (v, _) = json(&["reesideal", "--ideal", "ideal(x^2)"]);
    assert_eq!(v["warnings"][0], "input not m-primary: ideal");
}

#[test]
fn claim_suite_passes_and_names_tampered_entries() {
    let out = reesag(&["paper-suite"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    let (v, code) = json(&["paper-suite", "--tamper", "fgh.m3.n2"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["summary"]["failed"], serde_json::json!(["fgh.m3.n2"]));
    assert_eq!(reesag(&["paper-suite", "--tamper", "no.such.entry"]).status.code(), Some(2));
}

#[test]
fn hypersurface_defaults_to_three_variables() {
    let (v, code) = json(&["hypersurface", "--ell", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["mu"], 7);
    assert_eq!(v["params"]["vars"], "x,y,z");
}
