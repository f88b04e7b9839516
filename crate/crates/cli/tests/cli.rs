use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn superjet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjet")).args(args).output().expect("binary runs")
}

fn temp_model(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("superjet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn lists_every_check() {
    let out = superjet(&["--list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    let expected: Vec<&str> = superjet::checks::check_names().collect();
    assert_eq!(names, expected);
}

#[test]
fn passing_run_exits_zero() {
    let out = superjet(&["--model", "u1", "--check", "nilpotency,lie-algebra", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS nilpotency"));
    assert!(text.trim_end().ends_with("2 checks, 2 passed, 0 failed"));
}

#[test]
fn unknown_check_and_missing_model_exit_two() {
    let out = superjet(&["--check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
    let out = superjet(&["--model", "/nonexistent/model.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["--model", "su2", "--check", "jet-ring,dh-nilpotent,theta-s", "--seed", "9", "--report", "json"];
    let a = superjet(&args);
    let b = superjet(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["model"]["group"], "su2");
    assert_eq!(v["summary"]["total"], 3);
    assert!(v["checks"][0].get("wall_time_ms").is_none());
    let timed = superjet(&[&args[..], &["--timings"]].concat());
    let v: Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(v["checks"][0]["wall_time_ms"].is_u64());
}

#[test]
fn model_file_and_metric_override() {
    let path = temp_model("u1.json", r#"{"dimension": 2, "group": "u1", "sectors_enabled": {"fermion": false}}"#);
    let p = path.to_str().unwrap();
    let out = superjet(&["--model", p, "--check", "ghost-exactness", "--metric", "formal", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["model"]["metric_mode"], "formal");
    assert_eq!(v["model"]["dimension"], 2);
    let names: Vec<&str> =
        v["checks"][0]["findings"].as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    assert!(names.iter().all(|n| n.starts_with("[formal metric]")), "{names:?}");
}

#[test]
fn jacobi_failure_in_model_file_exits_two() {
    let mut c = vec![vec![vec![0i64; 3]; 3]; 3];
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        c[i][j][k] = 1;
        c[i][k][j] = -1;
    }
    c[0][0][1] = 1;
    c[0][1][0] = -1;
    let l = r#"[[["0","-1/2i"],["-1/2i","0"]], [["0","-1/2"],["1/2","0"]], [["-1/2i","0"],["0","1/2i"]]]"#;
    let body = format!(r#"{{"group": {{"c": {}, "l": {l}}}}}"#, serde_json::to_string(&c).unwrap());
    let path = temp_model("bad.json", &body);
    let out = superjet(&["--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Jacobi") && err.contains("(J,K,H)"), "{err}");
}

#[test]
fn bundled_models_load_and_pass() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../models");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = superjet(&["--model", path.to_str().unwrap(), "--check", "lie-algebra,nilpotency"]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        seen += 1;
    }
    assert!(seen >= 4);
}
