use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncshuffle"))
        .args(args)
        .env_remove("NCSHUFFLE_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn error_code(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).expect("json error on stderr");
    v["error"]["code"].as_str().unwrap().to_string()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn counts_noncrossing_partitions() {
    let out = run(&["enumerate", "--family", "nc", "--n", "4", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "14");
    let v = ok_json(&["enumerate", "--family", "monotone-irr", "--n", "3"]);
    assert_eq!(v["count"], 2);
    assert!(v["partitions"][0]["labels"].is_object());
}

#[test]
fn boolean_cumulants_of_moments() {
    let v = ok_json(&["transform", "--moments", "1,2", "--to", "boolean"]);
    assert_eq!(v["kind"], "boolean");
    assert_eq!(v["words"]["a"], "1/1");
    assert_eq!(v["words"]["aa"], "1/1");
}

#[test]
fn transforms_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let h = h.to_str().unwrap();
    let m = ok_json(&["transform", "--moments", "1,3,-2,7/2", "--to", "moments"]);
    for to in ["free", "boolean", "monotone"] {
        let out = run(&["transform", "--moments", "1,3,-2,7/2", "--to", to, "-o", h]);
        assert!(out.status.success());
        assert_eq!(ok_json(&["transform", "-i", h, "--from", to, "--to", "moments"]), m, "{to}");
    }
    let out = run(&["transform", "--moments", "1,3,-2,7/2", "--to", "t-monotone", "--t", "3/4", "-o", h]);
    assert!(out.status.success());
    assert_eq!(ok_json(&["transform", "-i", h, "--from", "t-monotone", "--to", "moments"]), m);
}

#[test]
fn t_boolean_shift_matches_direct_transform() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.json");
    let b = b.to_str().unwrap();
    assert!(run(&["transform", "--moments", "1,2,5,14", "--to", "boolean", "-o", b]).status.success());
    let shifted = ok_json(&["transform", "-i", b, "--from", "boolean", "--to", "t-boolean", "--t", "1/2"]);
    let direct = ok_json(&["transform", "--moments", "1,2,5,14", "--to", "t-boolean", "--t", "1/2"]);
    assert_eq!(shifted, direct);
}

#[test]
fn bernoulli_convolutions() {
    let m4 = |kind: &str| {
        let v = ok_json(&["convolve", "--moments", "0,1,0,1", "--moments", "0,1,0,1", "--kind", kind]);
        v["words"]["aaaa"].as_str().unwrap().to_string()
    };
    assert_eq!(m4("free"), "6/1");
    assert_eq!(m4("boolean"), "4/1");
    assert_eq!(m4("monotone"), "5/1");
}

const PAIR: &str = r#"{
  "phi": {"alphabet": ["a"], "truncation": 3, "kind": "character", "words": {"a": "1", "aa": "2", "aaa": "5"}},
  "psi": {"alphabet": ["a"], "truncation": 3, "kind": "character", "words": {"a": "0", "aa": "1", "aaa": "0"}}
}"#;

#[test]
fn pair_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "pair.json", PAIR);
    for to in ["cfree", "cmonotone"] {
        let direct = ok_json(&["ctransform", "-i", &p, "--to", to]);
        let relation = ok_json(&["ctransform", "-i", &p, "--to", to, "--via-relation"]);
        assert_eq!(direct, relation, "{to}");
    }
    let sq = ok_json(&["cconvolve", "-i", &p, "-i", &p, "--kind", "cmonotone"]);
    assert_eq!(sq, ok_json(&["cconvolve", "-i", &p, "--kind", "cmonotone", "--power", "2"]));
    let out = run(&["cconvolve", "-i", &p, "--kind", "cfree", "--power", "2"]);
    assert_eq!(error_code(&out), "usage");
}

#[test]
fn emitted_json_reparses_identically() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "pair.json", PAIR);
    let once = dir.path().join("once.json");
    let once = once.to_str().unwrap();
    assert!(run(&["cconvolve", "-i", &p, "-i", &p, "--kind", "cfree", "-o", once]).status.success());
    let twice = dir.path().join("twice.json");
    let twice = twice.to_str().unwrap();
    assert!(run(&["cconvolve", "-i", once, "--kind", "cmonotone", "--power", "1", "-o", twice]).status.success());
    assert_eq!(std::fs::read_to_string(once).unwrap(), std::fs::read_to_string(twice).unwrap());
}

#[test]
fn coefficient_table() {
    let v = ok_json(&["coefficients", "--n", "3"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let nested = rows.iter().find(|r| r["blocks"] == serde_json::json!([[1, 3], [2]])).unwrap();
    assert_eq!(nested["omega"], "-1/2");
    assert_eq!(nested["tree_factorial"], "2");
    assert_eq!(nested["monotone_count"], "1");
    assert_eq!(error_code(&run(&["coefficients", "--n", "9"])), "limit");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "shuffle-axioms", "--degree", "5", "--seed", "7"];
    let a = run(&args);
    assert!(a.status.success());
    let text = String::from_utf8_lossy(&a.stdout);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn structured_errors() {
    assert_eq!(error_code(&run(&["verify", "--suite", "nope"])), "unknown_suite");
    assert_eq!(error_code(&run(&["frobnicate"])), "usage");
    let capped = Command::new(env!("CARGO_BIN_EXE_ncshuffle"))
        .args(["transform", "--moments", "1,2,5,14", "--to", "free"])
        .env("NCSHUFFLE_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(error_code(&capped), "limit");
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"alphabet": ["a"], "truncation": 2, "kind": "character", "words": {"a": "1"}}"#);
    assert_eq!(error_code(&run(&["transform", "-i", &bad, "--to", "free"])), "missing_value");
    let p = write(dir.path(), "pair.json", PAIR);
    let out = run(&["convolve", "--moments", "1,2", "-i", &p, "--kind", "free"]);
    assert_eq!(out.status.code(), Some(1));
    let short = write(dir.path(), "short.json", r#"{"alphabet": ["a"], "truncation": 1, "kind": "character", "words": {"a": "1"}}"#);
    let out = run(&["convolve", "--moments", "1,2", "-i", &short, "--kind", "free"]);
    assert_eq!(error_code(&out), "mismatch");
}
