use std::path::Path;
use std::process::{Command, Output};

use adp_core::catalog::FamilyRecord;

fn adp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adp")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    let out = adp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout == golden(name), "{args:?} differs from {name}:\n{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn quadric_table_matches_golden() {
    assert_golden(&["enumerate", "--case", "quadric", "--format", "table"], "enumerate_quadric.txt");
}

#[test]
fn show_matches_golden() {
    assert_golden(&["show", "thm3.5-1"], "show_thm3.5-1.txt");
}

#[test]
fn json_export_matches_golden() {
    assert_golden(&["export", "--format", "json"], "export.json");
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["enumerate", "--case", "highdim", "--dim", "4", "--format", "json"][..],
        &["verify", "--format", "json"],
        &["export", "--format", "csv"],
    ] {
        assert_eq!(adp(args).stdout, adp(args).stdout, "{args:?}");
    }
}

#[test]
fn export_is_a_list_of_records() {
    let records: Vec<FamilyRecord> = serde_json::from_slice(&golden("export.json")).unwrap();
    assert_eq!(records.len(), adp_core::catalog::builtin_catalog().len());
}

#[test]
fn export_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.csv");
    let out = adp(&["export", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("id,"));
    assert_eq!(text.lines().count(), adp_core::catalog::builtin_catalog().len() + 1);
}

#[test]
fn verify_exits_zero_on_builtin_catalog() {
    let out = adp(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(adp(&["show", "nope"]).status.code(), Some(2));
    assert_eq!(adp(&["enumerate", "--case", "highdim", "--dim", "3"]).status.code(), Some(2));
    assert_eq!(adp(&["enumerate", "--case", "sextic"]).status.code(), Some(2));
}
