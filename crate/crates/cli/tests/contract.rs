//! Runs the `qgr` binary and checks outputs and exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn qgr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgr"))
        .args(args)
        .output()
        .expect("qgr runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = qgr(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code(&out), v)
}

#[test]
fn hopf_check_passes_at_smallest_level() {
    let (c, v) = json(&["check", "hopf", "--level", "1,1"]);
    assert_eq!(c, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["check"], "hopf");
    assert!(v["witnesses"].as_array().unwrap().is_empty());
    assert!(v["timing"].as_f64().unwrap() >= 0.0);
    assert_eq!(v["command"], "--format json check hopf --level 1,1");
}

#[test]
fn literal_antipode_fails_with_witnesses() {
    let (c, v) = json(&["check", "hopf", "--level", "2,1", "--convention", "literal"]);
    assert_eq!(c, 1);
    assert_eq!(v["pass"], false);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn sixteen_classical_relations() {
    let out = qgr(&["relations", "--level", "2,2", "--degree", "2", "--q1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("16 relations"));
    let (_, v) = json(&["relations", "--level", "2,2", "--degree", "2", "--q1"]);
    assert_eq!(v["count"], 16);
    assert_eq!(v["dimension"], 20);
}

#[test]
fn quantum_plucker_relation_listed() {
    let out = qgr(&["relations", "--level", "2,2", "--degree", "2"]);
    assert!(stdout(&out).contains("q^2*D[-2,-1]*D[0,1] - q*D[-2,0]*D[-1,1] + D[-2,1]*D[-1,0]"));
}

#[test]
fn maya_order() {
    let out = qgr(&["maya", "order", "[-1,1|3]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3");
    assert_eq!(code(&qgr(&["maya", "order", "[1,-1|3]"])), 2);
}

#[test]
fn same_column_relation_normalizes_to_zero() {
    let out = qgr(&[
        "normalize",
        "a[-1,-1]*a[0,-1] - q^-1*a[0,-1]*a[-1,-1]",
        "--level",
        "1,1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn minor_expansion() {
    let out = qgr(&["minor", "--level", "2,1", "--rows", "-2,-1"]);
    assert_eq!(
        stdout(&out).trim(),
        "a[-2,-2]*a[-1,-1] - q^-1*a[-2,-1]*a[-1,-2]"
    );
}

#[test]
fn parse_errors_exit_two() {
    for expr in ["", "a[-1,", "a[-1,-1] * D[-1]", "a[9,9]", "D[-1,-2]", "2/0"] {
        let out = qgr(&["normalize", expr, "--level", "1,1"]);
        assert_eq!(code(&out), 2, "{expr:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&qgr(&[])), 2);
    assert_eq!(code(&qgr(&["check", "hopf"])), 2);
    assert_eq!(code(&qgr(&["check", "hopf", "--level", "0,1"])), 2);
    assert_eq!(code(&qgr(&["check", "nonsense", "--level", "1,1"])), 2);
    assert_eq!(code(&qgr(&["coinvariants", "--level", "1,1", "--degree", "1", "--columns", "full"])), 2);
}

#[test]
fn size_caps_exit_three() {
    assert_eq!(code(&qgr(&["relations", "--level", "4,4", "--degree", "2"])), 3);
    assert_eq!(code(&qgr(&["relations", "--level", "1,1", "--degree", "9"])), 3);
    assert_eq!(code(&qgr(&["check", "hopf", "--level", "3,3"])), 3);
}

#[test]
fn config_raises_caps() {
    let dir = std::env::temp_dir().join(format!("qgr-contract-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("caps.toml");
    std::fs::write(&cfg, "[caps]\nmax_degree = 4\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let (c, v) = json(&["--config", cfg, "relations", "--level", "1,1", "--degree", "4"]);
    assert_eq!(c, 0);
    // two commuting generators: 16 words, 5 monomials
    assert_eq!(v["count"], 11);
    assert_eq!(v["dimension"], 5);
    std::fs::write(dir.join("bad.toml"), "[caps]\nmax_degre = 4\n").unwrap();
    let bad = dir.join("bad.toml");
    assert_eq!(code(&qgr(&["--config", bad.to_str().unwrap(), "maya", "order", "[|1]"])), 2);
}

#[test]
fn out_file_holds_json() {
    let path = std::env::temp_dir().join(format!("qgr-out-{}.json", std::process::id()));
    let out = qgr(&["check", "coaction", "--level", "1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn every_check_passes_at_two_two() {
    for kind in ["hopf", "coaction", "coinvariant", "squares", "towers", "rewriting"] {
        let (c, v) = json(&["check", kind, "--level", "2,2", "--seed", "3"]);
        assert_eq!(c, 0, "{kind}: {v}");
    }
}

#[test]
fn projections() {
    let run = |args: &[&str]| stdout(&qgr(args)).trim().to_string();
    assert_eq!(run(&["project", "rho", "D[-1,1|3]", "--to", "2,2"]), "D[-1,1]");
    assert_eq!(run(&["project", "rho", "D[-1,1|3]", "--to", "2,1"]), "0");
    assert_eq!(run(&["project", "r", "D[1]", "--from", "1,2", "--to", "2,2"]), "D[-2,1]");
    assert_eq!(run(&["project", "e", "D[-2,0]", "--from", "2,2", "--to", "1,1"]), "D[0]");
    assert_eq!(
        run(&["project", "E", "a[-2,-2]*a[-1,0]", "--from", "2,2", "--to", "1,1"]),
        "a[-1,0]"
    );
    assert_eq!(code(&qgr(&["project", "e", "D[-1]", "--to", "1,1"])), 2);
}

#[test]
fn coinvariants_match_grassmannian_dimension() {
    let (c, v) = json(&["coinvariants", "--level", "2,2", "--degree", "2"]);
    assert_eq!(c, 0);
    assert_eq!(v["dimension"], 6);
    let (_, v) = json(&["coinvariants", "--level", "2,2", "--degree", "3"]);
    assert_eq!(v["dimension"], 0);
}

#[test]
fn approx_recovers_element() {
    let (c, v) = json(&["approx", "D[-1,1|3]*D[|1] - 2", "--k", "2"]);
    assert_eq!(c, 0);
    assert_eq!(v["exact"], true);
    let (_, v) = json(&["approx", "D[-1,1|3]", "--k", "1"]);
    assert_eq!(v["exact"], false);
}
