use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn rlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_size() {
    let o = rlkit(&["check", "corpus:lrex0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid residuated lattice (5 elements)"), "{}", stdout(&o));
}

#[test]
fn classify_lrex8_line() {
    let o = rlkit(&["classify", "corpus:lrex8"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first, "co-Stone: false (witness c^⊤={d,1}); Stone identity: true");
}

#[test]
fn hull_lrex0_5() {
    let o = rlkit(&["hull", "corpus:lrex0_5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("9-element hull"), "{out}");
    assert!(out.contains("strongly co-Stone: true"));
    assert!(out.contains("  b -> (a,1)"));
}

#[test]
fn json_has_three_keys_and_is_stable() {
    let a = rlkit(&["--json", "classify", "corpus:lrex0"]);
    let b = rlkit(&["--json", "classify", "corpus:lrex0"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["algebra", "checks", "witnesses"]);
    assert_eq!(v["algebra"]["size"], 5);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn dot_is_drawn_bottom_to_top() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lrex3.dot");
    let o = rlkit(&["check", "corpus:lrex3", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("rankdir=BT"));
    assert_eq!(dot.matches(" -> ").count(), 7);
}

#[test]
fn round_trip_through_a_file() {
    let shown = rlkit(&["corpus", "show", "lrex3"]);
    let text = stdout(&shown);
    let json_end = text.find("\n}\n").unwrap() + 2;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lrex3.json");
    fs::write(&path, &text[..json_end]).unwrap();
    let o = rlkit(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("(6 elements)"));
}

#[test]
fn tampered_table_exits_one_with_witness() {
    let shown = rlkit(&["corpus", "show", "lrex3"]);
    let text = stdout(&shown);
    let json_end = text.find("\n}\n").unwrap() + 2;
    let mut v: Value = serde_json::from_str(&text[..json_end]).unwrap();
    // b ⊙ d = d ⊙ b = 0 instead of b
    v["times"][2][4] = "0".into();
    v["times"][4][2] = "0".into();
    v.as_object_mut().unwrap().remove("expected");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let o = rlkit(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let all = format!("{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert!(all.to_lowercase().contains("residuation"), "{all}");
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(rlkit(&["check", "/nonexistent/algebra.json"]).status.code(), Some(2));
    assert_eq!(rlkit(&["check", "corpus:nope"]).status.code(), Some(2));
    assert_eq!(rlkit(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(rlkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_single_algebra() {
    let o = rlkit(&["verify", "all", "corpus:lrex0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().contains("checks passed"));
}

#[test]
fn max_size_caps_products() {
    let o = rlkit(&["--max-size", "4", "hull", "corpus:lrex0_5"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn corpus_lists_stored_examples() {
    let out = stdout(&rlkit(&["corpus", "list"]));
    for key in ["lrex0", "lrex0_5", "lrex3", "lrex4", "lrex8"] {
        assert!(out.lines().any(|l| l.starts_with(key)), "{key} missing from\n{out}");
    }
}
