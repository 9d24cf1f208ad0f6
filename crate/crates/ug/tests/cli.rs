//! End-to-end runs of the installed binary: exact stdout lines and exit
//! codes for the documented interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ug"))
        .args(args)
        .current_dir(repo_root())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn breaking_prints_the_breaking_set() {
    let out = run(&["breaking", "fixtures/ex1.ug", "--H", "v,a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "B_H = {w}\n");
}

#[test]
fn failing_check_exits_one_but_still_reports() {
    let out = run(&["check-k", "fixtures/ex1.ug", "--H", "v,a"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "Condition (K): FAILS at u (loop e g)\n");

    let out = run(&["check-l", "fixtures/cyc1.ug", "--H", ""]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "Condition (L): FAILS at [x] (loop l)\n");
}

#[test]
fn passing_check_exits_zero() {
    let out = run(&["check-l", "fixtures/ex1.ug", "--H", "v,a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Condition (L): holds\n");

    let out = run(&["check-k", "fixtures/two.ug", "--H", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Condition (K): holds\n");
}

#[test]
fn invalid_file_exits_two_with_position() {
    let out = run(&["validate", "fixtures/empty-range.ug"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "");
    let err = stderr(&out);
    assert!(err.contains("empty-range.ug"), "stderr names the file: {err}");
    assert!(err.contains("line 5"), "stderr gives the line: {err}");
    assert!(err.contains("empty range"), "stderr names the defect: {err}");
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["validate", "fixtures/no-such.ug"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such.ug"));
}

#[test]
fn unknown_vertex_in_flag_exits_two_naming_the_flag() {
    let out = run(&["closure", "fixtures/ex1.ug", "--H", "z"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("--H"), "stderr names the flag: {err}");
    assert!(err.contains("z"), "stderr names the vertex: {err}");

    let out = run(&["quotient", "fixtures/ex1.ug", "--H", "v,a", "--B", "q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--B"));
}

#[test]
fn non_hereditary_seed_is_rejected_for_quotients() {
    let out = run(&["quotient", "fixtures/ex1.ug", "--H", "u"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--H"));
}

#[test]
fn split_vertex_names_are_accepted_in_flags() {
    let out = run(&["dual", "fixtures/ex1.ug", "--H", "v,a", "--F", "[w'],e"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("w'"));
}

#[test]
fn s_flag_requires_k() {
    let out = run(&["primitive", "fixtures/ex1.ug", "--S", "w"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--S requires --K"));
}

#[test]
fn target_pair_below_context_is_rejected() {
    let out = run(&["quotient", "fixtures/ex1.ug", "--H", "v,a", "--K", "v"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--K"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["closure", "fixtures/ex1.ug"]);
    assert_eq!(out.status.code(), Some(2), "--H is required for closure");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["report", "fixtures/ex1.ug", "--H", "v,a", "--json"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "identical invocations must emit identical bytes");
}

#[test]
fn dot_flag_writes_the_rendering() {
    let dir = std::env::temp_dir().join("ug-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quotient.dot");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "quotient",
        "fixtures/ex1.ug",
        "--H",
        "v,a",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).expect("dot file written");
    assert!(dot.starts_with("digraph "), "dot output: {dot}");
    assert!(dot.contains("w'"), "quotient rendering mentions the split vertex");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn max_vertices_caps_enumeration() {
    let out = run(&["pairs", "fixtures/ex1.ug", "--max-vertices", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2"), "cap is named in the message");
}
