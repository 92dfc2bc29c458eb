//! End-to-end tests of the command-line interface.

use std::process::Command;

use invweyl::cli::run_with;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("invweyl").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn bann_s3_json() {
    let v = json(&["bann", "--group", "S3"]);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["group"], "S3");
    let degrees: Vec<u64> = v["basis"].as_array().unwrap().iter().map(|p| p["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 1, 3]);
}

#[test]
fn canonical_basis_s4_text() {
    let (code, out, _) = run(&["canonical-basis", "--n", "4", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("canonical basis of B^ann(S4): 10 vectors"));
    assert!(out.contains("2*x4*x3 - x4*x2 - x4*x1 - x3*x2 - x3*x1 + 2*x2*x1"));
    let v = json(&["canonical-basis", "--n", "4"]);
    let hit = v["vectors"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["conjugate_tableau"] == serde_json::json!([[1, 3], [2, 4]]))
        .unwrap();
    assert_eq!(hit["conjugate_alpha"], serde_json::json!([0, 1, 0, 1]));
    assert_eq!(hit["gamma"], serde_json::json!([2, 2, 2, 2]));
    assert_eq!(hit["conjugate_ell"], serde_json::json!([0, -1, 1, 0]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["canonical-basis", "--n", "4", "--format", "json"][..],
        &["bann", "--group", "G(2,1,2)", "--format", "json"],
        &["mls", "--e", "6", "--i", "3", "--format", "json"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn branch_specht_spectra() {
    let v = json(&["branch", "--tableau", "[[1,2],[3]]"]);
    assert_eq!(v["children"].as_array().unwrap().len(), 3);
    let rows = json(&["branch", "--tableau", "1,1,2"]);
    assert_eq!(rows["vector"], v["vector"]);

    let s = json(&["specht", "--blocks", "{1,2,3},{4}"]);
    assert_eq!(s["degree"], 3);
    let h = json(&["specht", "--blocks", "{1,3},{2}", "--alpha", "0,1,0", "--d", "2"]);
    assert_eq!(h["degree"], 3);

    let sp = json(&["spectra", "--poly", "x1 - x2"]);
    assert_eq!(sp["gamma"], serde_json::json!([1, 1]));
    assert_eq!(sp["ell"], serde_json::json!([0, -1]));
    let all = json(&["spectra", "--n", "3"]);
    assert!(all["vectors"].as_array().unwrap().iter().all(|v| v["agrees"] == true));
}

#[test]
fn dihedral_and_mls() {
    let d = json(&["dihedral", "--e", "4"]);
    assert_eq!(d["dim"], 6);
    let m = json(&["mls", "--e", "4", "--i", "2"]);
    assert_eq!(m["label"], "M_2^I + M_2^II");
    assert_eq!(m["ann_matches"], true);
}

#[test]
fn verify_suites() {
    let (code, out, _) = run(&["verify", "--suite", "all", "--n-max", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
    let (code, _, err) = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown suite"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bann", "--group", "X3"]).0, 1);
    assert_eq!(run(&["canonical-basis", "--n", "0"]).0, 1);
    assert_eq!(run(&["specht", "--blocks", "{1,2},{2}"]).0, 1);
    assert_eq!(run(&["branch", "--tableau", "2,1"]).0, 1);
    assert_eq!(run(&["spectra"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn binary_streams_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_invweyl");
    let out = Command::new(bin).args(["bann", "--group", "S2", "--format", "json"]).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 2);
    assert!(out.stderr.is_empty());

    let out = Command::new(bin).args(["bann", "--group", "D0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = Command::new(bin).env("INVWEYL_THREADS", "1").args(["canonical-basis", "--n", "3"]).output().unwrap();
    assert!(out.status.success());
}
