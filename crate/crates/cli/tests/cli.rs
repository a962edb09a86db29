use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn delta_of_worked_example() {
    let o = run(&["delta", &data("example.chk")]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("delta = 2\n"));
    assert!(out.contains("witness = +XIZ"));
    assert!(out.contains("rank drop at S = {1, 3}"));
    assert!(stderr(&o).contains("anticommute"));
}

#[test]
fn delta_with_oracle() {
    let o = run(&["delta", &data("steane.chk"), "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("delta = 4 (oracle agrees)"));
    let o = run(&["eta", &data("ghz.chk"), "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("eta = 3 (oracle agrees)"));
}

#[test]
fn parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.chk");
    std::fs::write(&bad, "3 1\n*100|001\n").unwrap();
    let o = run(&["delta", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = run(&["delta", "/nonexistent/file.chk"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn budget_exhaustion_exits_two() {
    let o = run(&["delta", &data("steane.chk"), "--budget", "10"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("at least 2"));
}

#[test]
fn toric_emit_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("toric3.chk");
    let o = run(&["surface", "toric", "3", "--emit", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("n = 18") && text.contains("q = 4"));
    let o = run(&["delta", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("delta = 4"));
}

#[test]
fn counterexample_has_delta_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ce.chk");
    let o = run(&["surface", "counterexample", "--emit", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("min valence = 3"));
    let o = run(&["delta", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("delta = 2\n"));
}

#[test]
fn cellulation_files() {
    let o = run(&["surface", "from", &data("theta.cel")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("q = 1"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("open.cel");
    std::fs::write(&bad, "VERTICES 2\nEDGES 3\n1 1 2\n2 1 2\n3 1 2\nFACES 2\n1 1 2\n2 2 3\n").unwrap();
    let o = run(&["surface", "from", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("edge 1"), "{}", stderr(&o));
}

#[test]
fn verify_commands_pass() {
    let cases: [&[&str]; 5] = [
        &["verify", "theorem1", &data("example_commuting.chk"), "--trials", "50", "--seed", "7"],
        &["verify", "theorem2", &data("bell.chk"), "--nu", "1", "--trials", "20"],
        &["verify", "corollary3", &data("bell.chk"), "--nu", "1"],
        &["verify", "gap-pinch", &data("bell.chk"), "--nu", "1", "--trials", "50"],
        &["verify", "css", &data("steane.chk")],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(code(&o), 0, "{args:?}: {}{}", stdout(&o), stderr(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn hypothesis_failures_exit_two() {
    let o = run(&["verify", "theorem2", &data("bell.chk"), "--nu", "2"]);
    assert_eq!(code(&o), 2);
    let o = run(&["verify", "css", &data("example_commuting.chk")]);
    assert_eq!(code(&o), 2);
    let o = run(&["verify", "gap-pinch", &data("ghz.chk"), "--nu", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&["verify", "theorem2", &data("bell.chk")])), 1);
    assert_eq!(code(&run(&["verify", "theorem2", &data("bell.chk"), "--nu", "1", "--b", "1"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["verify", "theorem1", &data("example.chk")])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "verify",
        "gap-pinch",
        &data("ghz.chk"),
        "--nu",
        "2",
        "--trials",
        "5",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    let parse = |o: Output| -> Value {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v.as_object_mut().unwrap().remove("timing").is_some());
        v
    };
    let a = parse(run(&args));
    let b = parse(run(&args));
    assert_eq!(a, b);
    assert_eq!(a["schema"], "1");
    assert_eq!(a["command"], "verify gap-pinch");
    assert!(a["verdicts"].as_array().unwrap().iter().all(|v| v["pass"] == true));
    assert!(a["verdicts"][0].get("tolerance").is_some());
}
