use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hunters(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hunters"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
/// Subdivided claw: center 2 with legs 1-0, 3-4 and 5-6.
const CLAW: &str = "7 6\n0 1\n1 2\n2 3\n2 5\n3 4\n5 6\n";

#[test]
fn compute_path() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.g", P4);
    let out = hunters(&["compute", "--mode", "h", "--graph", &g]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "h=1\n");
    let out = hunters(&["compute", "--mode", "mh", "--graph", &g]);
    assert_eq!(stdout(&out), "mh=2\n");
}

#[test]
fn verify_claw_strategy() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "claw.g", CLAW);
    let s = write(dir.path(), "claw.s", "strategy 6\n2\n3\n2\n5\n2\n1\n");
    let out = hunters(&["verify", "--graph", &g, "--strategy", &s, "--start", "red"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "winning=true parsimonious=true monotone=true\n");
}

#[test]
fn verify_reports_violation_and_escape() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.g", P4);
    let s = write(dir.path(), "v.s", "strategy 3\n0\n1 2\n1 2\n");
    let out = hunters(&["verify", "--graph", &g, "--strategy", &s]);
    let text = stdout(&out);
    assert!(text.contains("monotone=false"), "{text}");
    assert!(text.contains("violation vertex=0 cleared=1 recontaminated=1"), "{text}");
    let s = write(dir.path(), "lose.s", "strategy 2\n1\n1\n");
    let text = stdout(&hunters(&["verify", "--graph", &g, "--strategy", &s]));
    assert!(text.starts_with("winning=false"), "{text}");
    assert!(text.contains("\nescape "), "{text}");
}

#[test]
fn computed_strategies_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "claw.g", CLAW);
    for (mode, start) in [("h", "all"), ("mh", "all"), ("mh", "red"), ("h", "0,4")] {
        let s = dir.path().join(format!("{mode}.s"));
        let s = s.to_str().unwrap();
        let out = hunters(&["compute", "--mode", mode, "--graph", &g, "--start", start, "--strategy", s]);
        assert_eq!(out.status.code(), Some(0));
        let out = hunters(&["verify", "--graph", &g, "--strategy", s, "--start", start]);
        assert!(stdout(&out).starts_with("winning=true"), "{mode} {start}");
    }
}

#[test]
fn compare_classes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "claw.g", CLAW);
    let out = hunters(&["compare", "--class", "tree", "--graph", &g]);
    assert_eq!(stdout(&out), "MATCH mh=2\n");
    let k4 = write(dir.path(), "k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = hunters(&["compare", "--class", "split", "--graph", &k4]);
    assert_eq!(stdout(&out), "MATCH h=3 mh=3\n");
    let out = hunters(&["compare", "--class", "auto", "--graph", &k4]);
    assert_eq!(stdout(&out), "class=split\nMATCH h=3 mh=3\n");
    let out = hunters(&["compare", "--class", "tree", "--graph", &k4]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pathwidth_and_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.g", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    assert_eq!(stdout(&hunters(&["pathwidth", "--graph", &g])), "pw=2\n");
    let star = write(dir.path(), "star.g", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    // the matching-based cover of a star is one edge, so t = 2
    let out = hunters(&["kernelize", "--graph", &star, "--k", "2"]);
    assert_eq!(stdout(&out), "kernel t=2 k=2 bound=52\ntrivially_yes\n");
    let out = hunters(&["kernelize", "--graph", &star, "--k", "1", "--mode", "h"]);
    assert_eq!(
        stdout(&out),
        "kernel t=2 k=1 bound=52\nreduced\n4 3\n0 1\n0 2\n0 3\nmap 4\n0 0\n1 1\n2 2\n3 3\nh<=1: true\n"
    );
}

#[test]
fn generate_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("spider");
    let o = out_dir.to_str().unwrap();
    let out = hunters(&["generate", "--family", "spider", "--params", "k=3,q=6", "--out", o]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("ell=24"));
    let g = out_dir.join("graph.g");
    let s = out_dir.join("strategy.s");
    let start = fs::read_to_string(out_dir.join("start.txt")).unwrap();
    let start = start.trim().replace(' ', ",");
    let out = hunters(&[
        "verify", "--graph", g.to_str().unwrap(), "--strategy", s.to_str().unwrap(), "--start", &start,
    ]);
    assert!(stdout(&out).starts_with("winning=true"));

    let a = hunters(&["generate", "--family", "random-tree", "--params", "n=8", "--seed", "5", "--out", o]);
    let first = fs::read_to_string(out_dir.join("graph.g")).unwrap();
    let b = hunters(&["generate", "--family", "random-tree", "--params", "n=8", "--seed", "5", "--out", o]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(first, fs::read_to_string(out_dir.join("graph.g")).unwrap());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    // usage errors
    assert_eq!(hunters(&["compute", "--mode", "x", "--graph", "g"]).status.code(), Some(2));
    assert_eq!(hunters(&["frobnicate"]).status.code(), Some(2));
    let out = hunters(&["generate", "--family", "random-tree", "--params", "n=8", "--out", o]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(hunters(&["generate", "--family", "spider", "--params", "k=3", "--out", o]).status.code(), Some(2));
    // domain errors
    let bad = write(dir.path(), "bad.g", "3 1\n0 1\n");
    let out = hunters(&["compute", "--mode", "h", "--graph", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(hunters(&["pathwidth", "--graph", "/nonexistent/g"]).status.code(), Some(1));
}
