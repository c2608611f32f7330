use std::process::{Command, Output};

fn qtsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtsym")).env_clear().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_prints_one_row_per_check() {
    let o = qtsym(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().filter(|l| !l.trim().is_empty()).count() >= 55);

    let o = qtsym(&["list", "--filter", "q-*"]);
    assert_eq!(stdout(&o).lines().filter(|l| !l.trim().is_empty()).count(), 7);
}

#[test]
fn list_json_is_an_array() {
    let o = qtsym(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() >= 55);
    assert!(rows.iter().all(|r| r["name"].is_string()));
}

#[test]
fn run_reports_structured_pass_record() {
    let o = qtsym(&["run", "--check", "theta-reciprocity", "-N", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 3);
    assert_eq!(v["failures"], 0);
    let check = &v["checks"][0];
    assert_eq!(check["name"], "theta-reciprocity");
    assert_eq!(check["status"], "pass");
    assert!(check["ref"].as_str().unwrap().contains("Theta"));
    assert!(check["instances"].as_u64().unwrap() > 0);
    assert!(check.get("counterexample").is_none());
}

#[test]
fn exit_codes() {
    let o = qtsym(&["run", "--check", "no-such"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such"));
    let o = qtsym(&["run", "--check", "theta-reciprocty", "-N", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("theta-reciprocity"));
    assert_eq!(qtsym(&["run"]).status.code(), Some(2));
    assert_eq!(qtsym(&["run", "--all", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(qtsym(&["compute", "theta(e1"]).status.code(), Some(2));
    assert_eq!(qtsym(&["compute", "nabla e4", "-N", "3"]).status.code(), Some(2));
    assert_eq!(qtsym(&["run", "--all", "-N", "1", "--qbound", "3"]).status.code(), Some(0));
}

#[test]
fn compute_examples() {
    let o = qtsym(&["compute", "theta(e1) e1", "--basis", "e"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("e[2] : 1"), "{}", stdout(&o));

    let o = qtsym(&["compute", "H[2]", "--basis", "s"]);
    let text = stdout(&o);
    assert!(text.contains("s[2] : 1"), "{text}");
    assert!(text.contains("s[1,1] : q"), "{text}");

    let o = qtsym(&["compute", "nabla e1", "--basis", "e"]);
    assert!(stdout(&o).contains("e[1] : -1"), "{}", stdout(&o));
}

#[test]
fn json_reports_are_reproducible_across_worker_counts() {
    let args = |jobs: &'static str| ["run", "--check", "macdonald", "-N", "3", "--format", "json", "--no-timings", "--jobs", jobs];
    let one = qtsym(&args("1"));
    let four = qtsym(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtsym"))
        .env_clear()
        .env("QTSYM_BOUND", "2")
        .env("QTSYM_FORMAT", "json")
        .args(["run", "--check", "mac-row"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 2);
}

#[test]
fn corrupted_cache_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let o = qtsym(&["cache", "--cache-dir", path, "-N", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.path().join("2-1.sym").exists());
    assert_eq!(qtsym(&["run", "--check", "mac-row", "-N", "3", "--cache-dir", path]).status.code(), Some(0));

    let file = dir.path().join("2-1.sym");
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, text.replacen(": ", ": 3*", 1)).unwrap();
    let o = qtsym(&["run", "--check", "mac-row", "-N", "3", "--cache-dir", path]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2-1"));
}

#[test]
fn in_process_entry_point_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qtsym::cli::run(["qtsym", "list", "--filter", "q-lemmas"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, qtsym(&["list", "--filter", "q-lemmas"]).stdout);
}
