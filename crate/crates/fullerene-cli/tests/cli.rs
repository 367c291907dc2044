//! End-to-end tests of the command-line binary: exit codes, report
//! determinism, file output, format auto-detection, and the oracle battery.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fullerene"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 report")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("fullerene-cli-test-{}-{name}", std::process::id()));
    path
}

/// A cubic planar graph with square faces: valid input, not a fullerene.
const CUBE_TEXT: &str = "8
0: 1 3 4
1: 2 0 5
2: 3 1 6
3: 0 2 7
4: 7 5 0
5: 4 6 1
6: 5 7 2
7: 6 4 3
";

fn golden(name: &str) -> String {
    let path = format!(
        "{}/../fullerene/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    );
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

#[test]
fn validate_accepts_a_generated_tube() {
    let output = run(&["validate", "--nanotube", "0"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("fullerene: true"));
    assert!(text.contains("vertices: 20"));
}

#[test]
fn validate_rejects_a_non_fullerene_with_exit_one() {
    let path = temp_path("cube.txt");
    std::fs::write(&path, CUBE_TEXT).unwrap();
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout_of(&output).contains("fullerene: false"));
}

#[test]
fn analyze_matches_the_frozen_fixture() {
    let output = run(&["analyze", "--nanotube", "2"]);
    assert!(output.status.success());
    assert_eq!(stdout_of(&output), golden("report_r2.txt"));
}

#[test]
fn analyze_is_byte_deterministic() {
    let first = run(&["analyze", "--nanotube", "1"]);
    let second = run(&["analyze", "--nanotube", "1"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn hamilton_reports_the_construction() {
    let output = run(&["hamilton", "--nanotube", "0"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("constructed_length: 20"));
    assert!(text.contains("face_path_pentagons: 6"));
    assert!(text.contains("distinct_variants: 10"));
}

#[test]
fn matchings_reports_bound_and_exact_count() {
    let output = run(&["matchings", "--nanotube", "1"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("lower_bound: 30"));
    assert!(text.contains("exhaustive_count: 151"));
}

#[test]
fn budget_flag_skips_exhaustive_counts() {
    let output = run(&["matchings", "--nanotube", "1", "--max-oracle-n", "20"]);
    assert!(output.status.success());
    assert!(stdout_of(&output).contains("exhaustive_count: skipped (n=30 above budget 20)"));
}

#[test]
fn generate_then_analyze_matches_direct_analysis() {
    let path = temp_path("tube2.txt");
    let generate = run(&["generate", "--nanotube", "2", "--out", path.to_str().unwrap()]);
    assert!(generate.status.success());
    let from_file = run(&["analyze", path.to_str().unwrap()]);
    let direct = run(&["analyze", "--nanotube", "2"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, direct.stdout);
    assert!(stdout_of(&from_file).contains("nontrivial: 2"));
}

#[test]
fn generated_planar_code_validates() {
    let path = temp_path("tube1.pc");
    let generate = run(&[
        "generate",
        "--nanotube",
        "1",
        "--format",
        "planar-code",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(generate.status.success());
    let output = run(&["validate", path.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stdout_of(&output).contains("vertices: 30"));
}

#[test]
fn out_flag_writes_exactly_what_stdout_gets() {
    let path = temp_path("report.txt");
    let to_file = run(&["validate", "--nanotube", "1", "--out", path.to_str().unwrap()]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = run(&["validate", "--nanotube", "1"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn oracle_passes_on_generated_tubes() {
    for r in ["0", "1"] {
        let output = run(&["oracle", "--nanotube", r]);
        assert!(output.status.success(), "oracle failed for r = {r}");
        let text = stdout_of(&output);
        assert!(text.contains("checks_failed: 0"));
        assert!(!text.contains(": fail"));
    }
}

#[test]
fn oracle_rejects_a_non_fullerene() {
    let path = temp_path("cube-oracle.txt");
    std::fs::write(&path, CUBE_TEXT).unwrap();
    let output = run(&["oracle", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["validate", "/no/such/file/anywhere"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["validate", "--nanotube", "1", "/also/a/path"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn multi_record_streams_get_numbered_reports() {
    // Two planar-code records in one stream: generate both tubes, then
    // splice the second record after the first by stripping its header.
    let path_a = temp_path("multi-a.pc");
    let path_b = temp_path("multi-b.pc");
    assert!(run(&["generate", "--nanotube", "0", "--format", "planar-code", "--out", path_a.to_str().unwrap()]).status.success());
    assert!(run(&["generate", "--nanotube", "1", "--format", "planar-code", "--out", path_b.to_str().unwrap()]).status.success());
    let mut stream = std::fs::read(&path_a).unwrap();
    let second = std::fs::read(&path_b).unwrap();
    let header = b">>planar_code<<";
    assert!(second.starts_with(header));
    stream.extend_from_slice(&second[header.len()..]);
    let path = temp_path("multi.pc");
    std::fs::write(&path, &stream).unwrap();
    let output = run(&["validate", path.to_str().unwrap()]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("# graph 1 of 2"));
    assert!(text.contains("# graph 2 of 2"));
    assert!(text.contains("vertices: 20"));
    assert!(text.contains("vertices: 30"));
}
