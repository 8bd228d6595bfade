use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn lie2kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie2kit"))
        .args(args)
        .env_remove("LIE2KIT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn omni_dim2_passes() {
    let o = lie2kit(&["omni", "--dim", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("[PASS] jacobiator"));
    assert!(out.contains("[PASS] pullback/square-commutes"));
    assert!(!out.contains("[FAIL]"));
}

#[test]
fn broken_lie2_fails_with_counterexample() {
    let f = fixture("broken_lie2.json");
    let o = lie2kit(&["check-lie2", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] linfty-n3"));
    assert!(out.contains("counterexample: n=3 on (V0:e0, V0:e1, V0:e2)"));
}

#[test]
fn strict_rep_passes() {
    let f = fixture("strict_rep.json");
    let o = lie2kit(&["check-rep", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let f = fixture("bad_rational.json");
    let o = lie2kit(&["build-end", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.d[0][0]"));
}

#[test]
fn float_in_exact_slot_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.json");
    std::fs::write(&p, r#"{"dimV1":1,"dimV0":1,"d":[[0.5]]}"#).unwrap();
    let o = lie2kit(&["build-end", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_file_and_bad_usage_exit_two() {
    assert_eq!(lie2kit(&["check-rep", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(lie2kit(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture("complex.json");
    let run = |name: &str| {
        let j = dir.path().join(name);
        let o = lie2kit(&["check-2group", f.to_str().unwrap(), "--seed", "7", "--samples", "30", "--json", j.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        (o.stdout, std::fs::read(j).unwrap())
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn seed_falls_back_to_environment() {
    let f = fixture("complex.json");
    let o = Command::new(env!("CARGO_BIN_EXE_lie2kit"))
        .args(["build-autv", f.to_str().unwrap(), "--samples", "10"])
        .env("LIE2KIT_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("seed 42, 10 samples"));
}

#[test]
fn strictify_output_is_a_valid_crossed_module() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let f = fixture("strict_rep.json");
    let o = lie2kit(&["strictify", f.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    let xm = dir.path().join("xm.json");
    std::fs::write(&xm, v["crossed_module"].to_string()).unwrap();
    let o = lie2kit(&["check-xmod", xm.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_report_is_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let j = dir.path().join("r.json");
    let o = lie2kit(&["omni", "--dim", "1", "--json", j.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&j).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn non_jacobi_bracket_is_reported_by_omni() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.json");
    let z = || vec!["0"; 3];
    let mut t = vec![vec![z(), z(), z()], vec![z(), z(), z()], vec![z(), z(), z()]];
    // [e0,e1] = e0, [e0,e2] = e2
    t[0][1][0] = "1";
    t[1][0][0] = "-1";
    t[0][2][2] = "1";
    t[2][0][2] = "-1";
    std::fs::write(&b, serde_json::json!({"dim": 3, "bracket": t}).to_string()).unwrap();
    let o = lie2kit(&["omni", "--dim", "3", "--bracket", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] dirac/closure"));
}
