//! End-to-end checks of the `duelband` binary.

use std::process::{Command, Output};

use duelband::harness::CSV_HEADER;

fn duelband(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duelband"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn list_prints_all_sixteen_scenarios() {
    let output = duelband(&["list"]);
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 16, "{stdout}");
    assert!(lines.iter().any(|l| l.starts_with("1good-linear\t")));
    assert!(lines.iter().any(|l| l.starts_with("yj\t")));
}

#[test]
fn list_json_exports_the_full_registry() {
    let output = duelband(&["list", "--json"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let scenarios = parsed.as_array().unwrap();
    assert_eq!(scenarios.len(), 16);
    let utility = scenarios
        .iter()
        .find(|s| s["name"] == "geom-logit")
        .unwrap();
    assert_eq!(utility["environment"]["kind"], "utility");
    assert_eq!(utility["environment"]["link"], "logit");
    assert_eq!(utility["environment"]["mu"].as_array().unwrap().len(), 6);
    let matrix = scenarios.iter().find(|s| s["name"] == "yj").unwrap();
    assert_eq!(matrix["environment"]["kind"], "preference_matrix");
    assert_eq!(
        matrix["environment"]["epsilon"].as_array().unwrap().len(),
        6
    );
}

#[test]
fn run_is_byte_identical_under_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.csv");
    let second = dir.path().join("second.csv");
    for path in [&first, &second] {
        let output = duelband(&[
            "run",
            "--scenario",
            "yj",
            "--algs",
            "sparring",
            "--runs",
            "2",
            "--horizon",
            "8",
            "--seed",
            "7",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(output.status.success(), "{}", stderr_of(&output));
    }
    let first_bytes = std::fs::read(&first).unwrap();
    let second_bytes = std::fs::read(&second).unwrap();
    assert!(!first_bytes.is_empty());
    assert_eq!(first_bytes, second_bytes);

    let text = String::from_utf8(first_bytes).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    // Checkpoints for horizon 8 are 1, 2, 4, 8: one row each.
    assert_eq!(lines.count(), 4);
    assert!(text.contains("yj,sparring,8,3,"));
}

#[test]
fn run_defaults_its_output_path_to_the_directory_variable() {
    let dir = tempfile::tempdir().unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_duelband"))
        .args([
            "run",
            "--scenario",
            "2good-natural",
            "--algs",
            "doubler",
            "--runs",
            "1",
            "--horizon",
            "4",
        ])
        .env("DUELBAND_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr_of(&output));
    assert!(dir.path().join("2good-natural.csv").is_file());
}

#[test]
fn unknown_scenarios_fail_loudly_by_name() {
    let output = duelband(&["run", "--scenario", "nosuch"]);
    assert!(!output.status.success());
    assert!(stderr_of(&output).contains("nosuch"));
}

#[test]
fn verify_matrix_reports_the_builtin_diagnostics() {
    let output = duelband(&["verify-matrix"]);
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    assert!(stdout.contains("minimal gamma = 1.500000"), "{stdout}");
    assert!(stdout.contains("violated by 1 pair(s): (3, 5)"), "{stdout}");
    assert!(stdout.contains("triangle"), "{stdout}");
}

#[test]
fn verify_matrix_accepts_a_matrix_file_and_rejects_bad_tables() {
    let dir = tempfile::tempdir().unwrap();

    let good = dir.path().join("good.json");
    std::fs::write(
        &good,
        r#"{"epsilon": [[0.0, 0.2], [-0.2, 0.0]], "implied_order": [0, 1]}"#,
    )
    .unwrap();
    let output = duelband(&["verify-matrix", "--file", good.to_str().unwrap()]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    assert!(stdout_of(&output).contains("2 arms"));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"epsilon": [[0.0, 0.2], [0.1, 0.0]]}"#).unwrap();
    let output = duelband(&["verify-matrix", "--file", bad.to_str().unwrap()]);
    assert!(!output.status.success());
    assert!(
        stderr_of(&output).contains("antisymmet"),
        "{}",
        stderr_of(&output)
    );
}

#[test]
fn selftest_reports_every_check_green() {
    let output = duelband(&["selftest"]);
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    assert!(stdout.contains("PASS link-complementarity"), "{stdout}");
    assert!(stdout.contains("checks passed"), "{stdout}");
    assert!(!stdout.contains("FAIL"), "{stdout}");
}
