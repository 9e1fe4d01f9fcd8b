use std::io::Write;
use std::process::Command;

use qlattice::cli::{run, Outcome, CORPUS};
use serde_json::Value;

fn qlattice(args: &[&str]) -> Outcome {
    run(
        std::iter::once("qlattice").chain(args.iter().copied()),
        false,
    )
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = qlattice(args);
    (
        serde_json::from_str(&out.stdout).expect("valid JSON"),
        out.code,
    )
}

#[test]
fn exit_codes() {
    assert_eq!(qlattice(&["qbinom", "2", "1", "2"]).code, 0);
    assert_eq!(qlattice(&["analyze", "Q8"]).code, 0);
    assert_eq!(qlattice(&["qbinom", "2", "1"]).code, 2);
    assert_eq!(qlattice(&["analyze", "C(4)x"]).code, 2);
    assert_eq!(qlattice(&["analyze", "file:/no/such/table"]).code, 2);
    assert_eq!(qlattice(&["analyze", "C(6)"]).code, 3);
    assert_eq!(qlattice(&["analyze", "C(1)"]).code, 3);
    assert_eq!(qlattice(&["analyze", "E(2,9)"]).code, 4);
    assert_eq!(qlattice(&["--cap", "8", "analyze", "C(9)"]).code, 4);
    assert_eq!(qlattice(&["expand", "20"]).code, 4);
}

#[test]
fn analyze_json_fields() {
    let (v, code) = json(&["analyze", "Q8", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["group"], "Q8");
    assert_eq!(v["order"], 8);
    assert_eq!(v["p"], 2);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["frattini_order"], 2);
    assert_eq!(
        v["histogram_observed"],
        serde_json::json!({"0": 1, "1": 3, "2": 1})
    );
    assert_eq!(v["histogram_observed"], v["histogram_expected"]);
    assert_eq!(v["total_observed"], 5);
    assert_eq!(v["clauses"].as_array().unwrap().len(), 6);
    assert_eq!(v["pass"], true);

    let (v, code) = json(&["analyze", "S(4)", "--json"]);
    assert_eq!(code, 3);
    assert_eq!(v["p"], Value::Null);
    assert_eq!(v["frattini_order"], 1);
    assert_eq!(v["unexpressible"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_corpus_passes() {
    let (v, code) = json(&["verify-corpus", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["groups"].as_array().unwrap().len(), CORPUS.len());
    assert_eq!(v["subspaces"].as_array().unwrap().len(), 15);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["analyze", "Heis(3)", "--json"][..],
        &["dot", "D(8)"],
        &["subspaces", "3", "3", "--list"],
        &["expand", "6"],
    ] {
        assert_eq!(qlattice(args), qlattice(args));
    }
}

#[test]
fn dot_output() {
    let out = qlattice(&["dot", "Q8"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("digraph \"Q8\" {"));
    assert_eq!(out.stdout.matches(" -> ").count(), 6);
    let out = qlattice(&["dot", "--space", "2", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("[label=").count(), 5);
    assert_eq!(qlattice(&["dot", "--space", "2", "4"]).code, 2);
}

#[test]
fn reads_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let table_path = dir.path().join("c4.txt");
    let mut f = std::fs::File::create(&table_path).unwrap();
    writeln!(
        f,
        "# cyclic of order 4\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2"
    )
    .unwrap();
    let perm_path = dir.path().join("d4.txt");
    std::fs::write(&perm_path, "(1 2 3 4)\n(1 3)\n").unwrap();

    let spec = format!("file:{}", table_path.display());
    let (v, code) = json(&["analyze", &spec, "--json"]);
    assert_eq!((code, v["rank"].clone()), (0, Value::from(1)));

    let spec = format!("perm:{}", perm_path.display());
    let (v, code) = json(&["analyze", &spec, "--json"]);
    assert_eq!(
        (code, v["order"].clone(), v["rank"].clone()),
        (0, 8.into(), 2.into())
    );

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3\n0 1 2\n1 2 0\n2 0 0\n").unwrap();
    let out = qlattice(&["analyze", &format!("file:{}", bad.display())]);
    assert_eq!(out.code, 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn binary_exit_code_and_no_color() {
    let bin = env!("CARGO_BIN_EXE_qlattice");
    let out = Command::new(bin)
        .args(["analyze", "S(4)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin)
        .args(["analyze", "Q8"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(!String::from_utf8(out.stdout).unwrap().contains('\x1b'));
}
