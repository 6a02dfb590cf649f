//! End-to-end checks of the command-line interface and its exit-code
//! contract: 0 pass, 1 mathematical violation, 2 usage error.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_algebra(dir: &Path, name: &str, args: &[&str]) -> std::path::PathBuf {
    let path = dir.join(name);
    let out = leibniz(args);
    assert!(
        out.status.success(),
        "build failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn build_l2_is_deterministic_and_parses() {
    let a = leibniz(&["build", "--family", "L2", "--n", "5"]);
    let b = leibniz(&["build", "--family", "L2", "--n", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["dim"], 5);
    // Nonzero bracket pairs of the n=5 table: (1,1), (3,1), (4,1), (1,3),
    // (1,4); six coefficient entries in total.
    assert_eq!(v["brackets"].as_array().unwrap().len(), 5);
    let terms: usize = v["brackets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["result"].as_array().unwrap().len())
        .sum();
    assert_eq!(terms, 6);
}

#[test]
fn build_rejects_bad_descriptors_with_exit_2() {
    let out = leibniz(&["build", "--family", "G2", "--n", "4", "--param", "delta=1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("G2 requires n >= 5"), "{err}");
}

#[test]
fn build_allows_zero_parameter_in_unified_family() {
    let out = leibniz(&["build", "--family", "G1", "--n", "4", "--param", "a=0"]);
    assert!(out.status.success());
}

#[test]
fn check_leibniz_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = write_algebra(
        dir.path(),
        "g1.json",
        &["build", "--family", "G1", "--n", "5", "--param", "a=1/2"],
    );
    let g1s = g1.to_str().unwrap();
    // Right identity holds: exit 0.
    let right = leibniz(&["check", "leibniz", "--side", "right", g1s]);
    assert_eq!(right.status.code(), Some(0));
    // Left identity fails: exit 1 with at least one violating triple.
    let left = leibniz(&["check", "leibniz", "--side", "left", g1s, "--json"]);
    assert_eq!(left.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&left.stdout).unwrap();
    assert!(report["left_violations"].as_u64().unwrap() >= 1);
}

#[test]
fn check_series_reports_published_line() {
    let dir = tempfile::tempdir().unwrap();
    let l2 = write_algebra(dir.path(), "l2.json", &["build", "--family", "L2", "--n", "6"]);
    let out = leibniz(&["check", "series", l2.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ds_dims"], serde_json::json!([6, 4, 0]));
    assert_eq!(v["ls_dims"], serde_json::json!([6, 4, 2, 1, 0]));
    assert_eq!(v["nil_index"], serde_json::json!(4));
}

#[test]
fn check_center_and_derivations() {
    let dir = tempfile::tempdir().unwrap();
    let l2 = write_algebra(dir.path(), "l2.json", &["build", "--family", "L2", "--n", "4"]);
    let out = leibniz(&["check", "center", l2.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 2);

    let out = leibniz(&["check", "derivations", l2.to_str().unwrap(), "--json", "--dump"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 6);
    assert_eq!(v["basis"].as_array().unwrap().len(), 6);
}

#[test]
fn check_nilradical_leading_block() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_algebra(
        dir.path(),
        "g.json",
        &["build", "--family", "G1", "--n", "4", "--param", "a=1"],
    );
    let ok = leibniz(&["check", "nilradical", g.to_str().unwrap(), "--leading", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = leibniz(&["check", "nilradical", g.to_str().unwrap(), "--leading", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    let usage = leibniz(&["check", "nilradical", g.to_str().unwrap()]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn check_iso_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_algebra(dir.path(), "a.json", &["build", "--family", "L2", "--n", "4"]);
    let b = write_algebra(dir.path(), "b.json", &["build", "--family", "L2", "--n", "4"]);
    let id = dir.path().join("id.json");
    fs::write(
        &id,
        r#"{"dim":4,"columns":[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}"#,
    )
    .unwrap();
    let out = leibniz(&[
        "check",
        "iso",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--map",
        id.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn desc_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let desc = dir.path().join("desc.json");
    fs::write(&desc, r#"{"family":"G3","n":5,"params":{"delta":"-1"}}"#).unwrap();
    let from_file = leibniz(&["build", "--desc-file", desc.to_str().unwrap()]);
    assert!(from_file.status.success());
    let inline = leibniz(&["build", "--family", "G3", "--n", "5", "--param", "delta=-1"]);
    assert_eq!(from_file.stdout, inline.stdout);
}

#[test]
fn suite_rejects_small_n_with_exit_2() {
    let out = leibniz(&["suite", "--n-min", "3", "--n-max", "5", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_suite_passes_and_prints_criterion_lines() {
    let out = leibniz(&[
        "suite",
        "--n-min",
        "4",
        "--n-max",
        "4",
        "--samples",
        "1",
        "--seed",
        "5",
        "--strict-transcription",
    ]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    for idx in 1..=10 {
        assert!(
            stdout.contains(&format!("criterion {idx:>2} (")),
            "missing line for criterion {idx}: {stdout}"
        );
    }
    assert!(stdout.contains("no patch ledger entries exercised"));
    assert!(stdout.contains("all criteria passed"));
}

#[test]
fn suite_output_independent_of_parallelism() {
    let seq = leibniz(&["suite", "--n-min", "4", "--n-max", "5", "--samples", "2", "--seed", "9"]);
    let par = leibniz(&[
        "suite", "--n-min", "4", "--n-max", "5", "--samples", "2", "--seed", "9", "--parallel",
    ]);
    assert_eq!(seq.status.code(), Some(0));
    assert_eq!(seq.stdout, par.stdout);
}
