use std::path::Path;
use std::process::{Command, Output};

use complicial::io::{self, Payload};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_complicial"))
        .args(args)
        .env_remove("COMPLICIAL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn gen_admissible_matches_golden() {
    let o = run(&["gen", "admissible", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/admissible_n2_k1.json"));
    let doc = io::parse(&stdout(&o)).unwrap();
    let Payload::Complex(c) = doc.payload else { panic!("not a complex") };
    assert_eq!(c.simplices.iter().filter(|s| s.marked).count(), 1);
}

#[test]
fn strict_complicial_poset_passes() {
    let o = run(&["check", "strict-complicial", "@poset2", "--bound", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn saturation_failure_emits_replayable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = run(&[
        "check",
        "saturated",
        "@walking-iso",
        "--bound",
        "3",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"witness\""));
    let v = run(&["validate", report.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("witness replays"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["nerve", "@two-cell", "--bound", "3"][..],
        &["oriental", "3"][..],
        &["hocat", "@cyclic3"][..],
        &["gen", "saturation", "--m", "-1", "--n", "0"][..],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = run(&["oriental", "4", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_complicial"))
        .args(["oriental", "4"])
        .env("COMPLICIAL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "complicial", "@nope"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "horn", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn malformed_documents_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"format\": 1,\n  \"payload\": {\"complex\": {\"bound\": 1, \"colour\": 3}}\n}\n").unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("colour") && err.contains("line 3"), "{err}");
}

#[test]
fn nerve_then_check_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.json");
    let o = run(&["nerve", "@walking-iso", "--stratification", "saturated1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(Path::new(&path).exists());
    let p = path.to_str().unwrap();
    assert_eq!(run(&["check", "saturated", p]).status.code(), Some(0));
    assert_eq!(run(&["check", "quasi-category", p]).status.code(), Some(0));
    assert_eq!(run(&["check", "n-trivial", p, "--n", "0"]).status.code(), Some(0));
    let poset = ["check", "n-trivial", "@poset2", "--stratification", "saturated1", "--n"];
    assert_eq!(run(&[&poset[..], &["0"]].concat()).status.code(), Some(1));
    assert_eq!(run(&[&poset[..], &["1"]].concat()).status.code(), Some(0));
    let e = run(&["equivs", p]);
    assert_eq!(e.status.code(), Some(0));
    assert!(stdout(&e).contains("<0,1,f>"));
}

#[test]
fn decompose_inclusion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.json");
    run(&["gen", "horn", "--n", "2", "--k", "1", "--output", path.to_str().unwrap()]);
    let o = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = io::parse(&stdout(&o)).unwrap();
    let Payload::Steps(steps) = doc.payload else { panic!("not steps") };
    let names: Vec<&str> = steps.iter().map(|s| s.simplex()).collect();
    assert_eq!(names, ["02", "012"]);
}

#[test]
fn oriental_search_matches_closure() {
    let a = stdout(&run(&["oriental", "3"]));
    let b = stdout(&run(&["oriental", "3", "--search"]));
    assert_eq!(a, b);
    assert!(stdout(&run(&["oriental", "2", "--tables"])).contains("omega_cat"));
    assert_eq!(run(&["oriental", "6"]).status.code(), Some(2));
}
