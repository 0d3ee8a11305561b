use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lerchlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CATALAN: f64 = 0.915_965_594_177_219;

fn leading_value(s: &str) -> f64 {
    let tail = s.split('=').next_back().unwrap();
    tail.split_whitespace().next().unwrap().parse().unwrap()
}

#[test]
fn phi_at_half_is_four_catalan() {
    let o = run(&["specfun", "phi", "-c", "-1", "-q", "2", "--alpha", "1/2"]);
    assert!(o.status.success());
    let v = leading_value(&stdout(&o));
    assert!((v - 4.0 * CATALAN).abs() < 1e-13, "{v}");
}

#[test]
fn batir_eval_and_oracle() {
    let args = ["--family", "BBP_O", "-p", "1", "-q", "1", "-n", "1", "-a", "-1", "-b", "1"];
    let want = CATALAN - std::f64::consts::PI / 2.0 * std::f64::consts::LN_2;
    for cmd in ["eval", "oracle"] {
        let mut all = vec![cmd];
        all.extend(args);
        let o = run(&all);
        assert!(o.status.success());
        let first = stdout(&o).lines().next().unwrap().to_string();
        assert!((leading_value(&first) - want).abs() < 1e-10, "{cmd}: {first}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let decimal = run(&["specfun", "phi", "-c", "-1", "-q", "2", "--alpha", "0.5"]);
    assert_eq!(decimal.status.code(), Some(2));
    let invalid = run(&["eval", "--family", "BBP_O", "-p", "0", "-q", "1", "-n", "1", "-a", "-1", "-b", "1"]);
    assert_eq!(invalid.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&invalid.stderr).contains("CAP"));
    let unknown = run(&["verify", "--family", "NOPE"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn failures_exit_one() {
    let o = run(&["verify", "--family", "EULER_H", "--pmax", "2", "--qmax", "2", "--nmax", "1", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_report_schema() {
    let o = run(&["verify", "--family", "EULER_H", "--pmax", "2", "--qmax", "2", "--nmax", "1"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 16);
    for r in &rows {
        assert_eq!(r.as_object().unwrap().len(), 14);
        let status = r["status"].as_str().unwrap();
        assert!(status == "PASS" || status == "SKIPPED_INVALID", "{r}");
        if status == "PASS" {
            assert!(r["rel_err"].as_f64().unwrap() <= 1e-8);
        }
    }
}

#[test]
fn csv_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let o = run(&[
        "verify", "--family", "BBP_H", "--pmax", "2", "--qmax", "1", "--nmax", "2", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let mut rd = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rd.headers().unwrap().len(), 14);
    assert_eq!(rd.records().count(), 16);
}

#[test]
fn sweeps_are_deterministic() {
    let strip = |o: &Output| -> Vec<serde_json::Value> {
        let mut rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
        for r in &mut rows {
            r.as_object_mut().unwrap().remove("wall_time_ms");
        }
        rows
    };
    let args = ["verify", "--family", "INT_UNIT_1", "--family", "BBP_O", "--pmax", "2", "--qmax", "2", "--nmax", "2"];
    assert_eq!(strip(&run(&args)), strip(&run(&args)));
}
