//! End-to-end checks of the command-line surface: output schemas, the set
//! literal and @file conventions, and exit codes.

use serde_json::Value;
use std::process::{Command, Output};

fn doubling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doubling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_emits_the_documented_schema() {
    let out = doubling(&["classify", "0,1,2,5,6,10"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"], serde_json::json!([0, 1, 2, 5, 6, 10]));
    assert_eq!(v["normalized"], serde_json::json!([0, 1, 2, 5, 6, 10]));
    assert_eq!(v["offset"], 0);
    assert_eq!(v["scale"], 1);
    assert_eq!(v["size"], 6);
    assert_eq!(v["sumset_size"], 15);
    assert_eq!(v["b"], 4);
    assert_eq!(v["regime"], "critical");
    assert!(v["cases"]["bi_ap"].is_null());
    assert!(v["cases"]["long_interval"].is_null());
    assert_eq!(v["cases"]["k6"]["vertices"], serde_json::json!([0, 2, 10]));
    assert_eq!(v["cases"]["k6"]["mapping"].as_array().unwrap().len(), 6);
    let forms = v["cases"]["forms"].as_array().unwrap();
    assert!(forms
        .iter()
        .any(|f| f["family"] == "T" && f["k"] == 0 && f["u"].is_null()));
}

#[test]
fn classify_maps_certificates_back_through_the_affine_map() {
    let out = doubling(&["classify", "6,10,18"]);
    let v = stdout_json(&out);
    assert_eq!(v["normalized"], serde_json::json!([0, 1, 3]));
    assert_eq!(v["offset"], 6);
    assert_eq!(v["scale"], 4);
    assert_eq!(v["cases"]["bi_ap"]["d"], 4);
    assert_eq!(v["cases"]["bi_ap"]["i0"], serde_json::json!([6, 10]));
    assert_eq!(v["cases"]["bi_ap"]["i1"], serde_json::json!([18]));
    // the run in 2A starts at 2·offset + scale·start
    assert_eq!(v["cases"]["long_interval"]["start"], 12);
    assert_eq!(v["cases"]["long_interval"]["length"], 5);
}

#[test]
fn classify_reads_one_set_per_line_from_a_file() {
    let dir = std::env::temp_dir().join("doubling-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("batch.txt");
    std::fs::write(&path, "0,1,3\n0,2,3,4,7\n").unwrap();
    let out = doubling(&["classify", &format!("@{}", path.display())]);
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["input"], serde_json::json!([0, 1, 3]));
    assert_eq!(lines[1]["cases"]["long_interval"]["start"], 2);
}

#[test]
fn iso_prints_a_witness_or_null() {
    let v = stdout_json(&doubling(&["iso", "0,1,2", "0,2,4"]));
    let pairs = v["mapping"].as_array().unwrap();
    assert_eq!(pairs.len(), 3);

    let out = doubling(&["iso", "0,1,2", "0,1,3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "null");
}

#[test]
fn forms_lists_the_collections() {
    let v = stdout_json(&doubling(&["forms", "--n", "6", "--family", "T"]));
    assert_eq!(v.as_array().unwrap().len(), 3);

    let v = stdout_json(&doubling(&["forms", "--n", "10", "--family", "both"]));
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f["family"] == "S" && f["u"] == 4));

    let out = doubling(&["forms", "--n", "7", "--family", "T"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_sets_one_per_line() {
    let out = doubling(&["enumerate", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().collect::<Vec<_>>(), vec!["0,1,3", "0,2,3", "0,1,2,3"]);

    let out = doubling(&["enumerate", "--n", "4", "--regime", "critical"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn census_reports_and_respects_out_path() {
    let v = stdout_json(&doubling(&["census", "--max-n", "8"]));
    assert_eq!(v["max_span"], 8);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);

    let dir = std::env::temp_dir().join("doubling-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.json");
    let out = doubling(&["census", "--max-n", "6", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["max_span"], 6);
}

#[test]
fn verify_exit_codes() {
    let out = doubling(&["verify", "--max-n", "8", "--theorems", "thm_2k1b,thm_main"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 0);

    // input errors exit 2
    let out = doubling(&["verify", "--max-n", "8", "--theorems", "thm_nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = doubling(&["classify", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = doubling(&["classify", "7"]);
    assert_eq!(out.status.code(), Some(2)); // degenerate set
    let out = doubling(&["census", "--max-n", "30"]);
    assert_eq!(out.status.code(), Some(2)); // cost guard without --force

    // usage errors exit 2 (clap default)
    let out = doubling(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
