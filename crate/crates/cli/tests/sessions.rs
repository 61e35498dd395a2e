use std::process::Command;

use serde_json::Value;
use singinv::Config;
use singinv_cli::{exit_status, run_session, Record};

fn run(text: &str) -> Vec<Record> {
    run_session(text, &Config::default(), false).unwrap()
}

fn int(r: &Record, key: &str) -> i64 {
    r.values[key].as_i64().unwrap_or_else(|| panic!("{key} in {}", r.to_json()))
}

#[test]
fn cubic_surface_session() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/sessions/cubic.sess")).unwrap();
    let rs = run(&text);
    assert_eq!(rs.len(), 2);
    let r = &rs[0];
    assert_eq!(
        (int(r, "mu_br"), int(r, "gsv"), int(r, "mu0"), int(r, "tau")),
        (14, 21, 1, 8)
    );
    assert!(r.passed());
    assert_eq!(r.details, vec!["14 = 21 + 1 - 8".to_string()]);
    assert_eq!(int(&rs[1], "mu_br_theta"), 14);
    assert_eq!(exit_status(&rs), 0);
}

#[test]
fn blowup_session() {
    let rs = run("ring x, y\nform F = 2*x dy - 3*y dx\ncurve X = y^2 - x^5\ncompute blowup-verify F X\n");
    assert!(rs[0].passed());
    assert_eq!(int(&rs[0], "mu_br_0"), 7);
    assert!(rs[0].details.contains(&"7 = 5 + -1 + 2 + 1 + 1 - 1 = 7".to_string()));
}

#[test]
fn empty_session() {
    assert!(run("").is_empty());
    assert!(run("# nothing\nring x, y\n").is_empty());
    assert_eq!(exit_status(&run("")), 0);
}

#[test]
fn domain_and_resource_errors() {
    // y dx - x dy leaves every line through the origin invariant
    let rs = run("ring x, y\nform w = y dx - x dy\ncurve L = y - 2*x\ncompute br w L\ncompute gsv w L\n");
    assert_eq!(rs[0].error.as_ref().unwrap().kind, "domain");
    assert_eq!(rs[1].values["gsv"], Value::from("infinity"));
    assert_eq!(exit_status(&rs), 2);
    let tight = Config {
        max_steps: 1,
        ..Config::default()
    };
    let rs = run_session("ring x, y\ncurve X = y^7 - x^3 + x^2*y^4\ncompute tjurina X\n", &tight, false).unwrap();
    assert_eq!(rs[0].error.as_ref().unwrap().kind, "resource");
    assert_eq!(exit_status(&rs), 3);
}

#[test]
fn single_directive_reproduces_session_values() {
    let full = run(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/sessions/plane.sess")).unwrap());
    let alone = run("ring x, y\nform W = x dy + y dx\nparam g = (t^2, t^5)\ncurve X = y^2 - x^5\ncompute pullback-order W g X\n");
    let from_full = full.iter().find(|r| r.directive == "pullback-order W g X").unwrap();
    assert_eq!(from_full.values, alone[0].values);
    assert_eq!(int(&alone[0], "ord"), 6);
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_singinv"))
}

#[test]
fn binary_exit_codes() {
    let dir = std::env::temp_dir().join(format!("singinv-sessions-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    let ok = write("ok.sess", "ring x, y\nform w = x dy + y dx\ncurve X = y^2 - x^5\ncompute br w X\n");
    let out = bin().arg("run").arg(&ok).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let line: Value = serde_json::from_slice(out.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert_eq!(line["values"]["mu_br"], Value::from(7));
    let keys: Vec<&str> = line.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["directive", "inputs", "values", "checks"]);

    let bad = write("bad.sess", "ring x, y\ncurve X = y^2 - \n");
    let out = bin().arg("run").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let inv = write("inv.sess", "ring x, y\nform w = y dx - x dy\ncurve L = y - 2*x\ncompute br w L\n");
    assert_eq!(bin().arg("run").arg(&inv).output().unwrap().status.code(), Some(2));

    let res = write("res.sess", "ring x, y\ncurve X = y^7 - x^3 + x^2*y^4\ncompute tjurina X\n");
    let out = bin().args(["run", "--steps", "1"]).arg(&res).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_filter_and_perturbation() {
    let out = bin().args(["corpus", "--filter", "blowup"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("blowup-linear") && !text.contains("cubic-surface"), "{text}");
    let out = bin().args(["corpus", "--filter", "blowup", "--perturb"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}
