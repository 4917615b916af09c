use std::process::{Command, Output};

fn run(args: &[&str], env: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_idealarith"));
    c.args(args).env_remove("IDEALARITH_CAPS");
    if let Some(v) = env {
        c.env("IDEALARITH_CAPS", v);
    }
    c.output().unwrap()
}

#[test]
fn passing_run_exits_zero() {
    let out = run(&["certify-atom", "cprime"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict=Certified"));
    assert!(text.ends_with("1 experiments, 0 failed: PASS\n"));
}

#[test]
fn inconclusive_certificate_exits_one() {
    let out = run(&["--pattern-budget", "1", "certify-atom", "b[3]"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("verdict=Inconclusive"));
}

#[test]
fn input_and_cap_errors_exit_two_silently() {
    let out = run(&["zerosum", "--group", "C3", "[1^2]"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["theorem51", "--k", "2..9"], Some(r#"{"max_k": 8}"#));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("error"));
}

#[test]
fn env_caps_are_recorded() {
    let out = run(
        &["theorem51", "--k", "2..3", "--format", "json"],
        Some(r#"{"max_k": 3}"#),
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["caps"]["max_k"], 3);
    assert_eq!(v["passed"], true);
    let keys: Vec<&str> = v["experiments"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["key"].as_str().unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn writes_csv_to_file() {
    let dir = std::env::temp_dir().join(format!("idealarith-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.csv");
    let out = run(
        &[
            "powermonoid-iso",
            "--max",
            "4",
            "--format",
            "csv",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("key,passed,"));
    assert_eq!(csv.lines().count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_monoid_literal_is_an_error() {
    let out = run(&["atoms", "torus"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
