use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e6rep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn reports(doc: &Value) -> Vec<&Value> {
    doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["reports"].as_array().unwrap())
        .collect()
}

#[test]
fn identity_rows() {
    let out = run(&["identity", "--max-degree", "10"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "identity");
    let rows = doc["sections"][0]["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r["passed"] == true));
    assert_eq!(rows[10]["binomial"], "254186856");
    assert_eq!(doc["summary"]["fail"], "0");
}

#[test]
fn singular_degree_two() {
    let doc = json(&["singular", "--degree", "2"]);
    let census = doc["sections"][0]["payload"]["census"].as_array().unwrap();
    let deg2 = census.iter().find(|c| c["degree"] == 2).unwrap();
    let zeta = deg2["vectors"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["weight"] == "(0,0,0,0,0,1)")
        .unwrap();
    assert_eq!(zeta["vectors"][0], "x1x14 + x2x11 + x3x9 - x4x7 + x5x6");
}

#[test]
fn rep_check_flags_printed_table() {
    let doc = json(&["rep", "--check"]);
    assert_eq!(doc["summary"]["fail"], "0");
    let r = reports(&doc);
    let printed = r
        .iter()
        .find(|r| r["check_id"] == "rep.printed_operators")
        .unwrap();
    assert_eq!(printed["status"], "discrepancy-flagged");
    assert!(r
        .iter()
        .any(|r| r["check_id"] == "rep.weight_table" && r["status"] == "pass"));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["rep", "--check"]);
    let b = run(&["rep", "--check"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--text", "identity", "--max-degree", "6"]);
    let b = run(&["--text", "identity", "--max-degree", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn eta_dump() {
    let doc = json(&["invariant", "--dump", "eta"]);
    let p = doc["output"]["eta"]["polynomial"].as_str().unwrap();
    assert!(p.starts_with("3x1x14x27 + "));
    assert!(p.contains("- 3x4x7x27"));
    assert_eq!(p.matches('x').count(), 45 * 3);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let guarded = run(&["singular", "--degree", "9"]);
    assert_eq!(guarded.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&guarded.stdout).unwrap();
    assert!(err["error"].as_str().unwrap().contains("--force"));
    assert_eq!(run(&["roots"]).status.code(), Some(0));
}
