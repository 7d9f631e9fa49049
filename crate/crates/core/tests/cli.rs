//! End-to-end tests of the command-line interface through the built binary.

use std::process::Command;

fn hurwitz(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = hurwitz(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn compute_one_part() {
    assert_eq!(
        stdout_of(&["compute", "--genus", "1", "--mu", "1,1", "--one-part"]).trim(),
        "1/6"
    );
}

#[test]
fn compute_double() {
    assert_eq!(
        stdout_of(&["compute", "--genus", "0", "--mu", "2", "--nu", "2"]).trim(),
        "1/2"
    );
}

#[test]
fn compute_orbifold_and_spin() {
    assert_eq!(
        stdout_of(&["compute", "--genus", "0", "--mu", "2,2", "--orbifold", "2"]).trim(),
        "1"
    );
    assert_eq!(
        stdout_of(&["compute", "--genus", "1", "--mu", "2", "--spin", "2"]).trim(),
        "7/24"
    );
}

#[test]
fn compute_routes_agree() {
    for route in ["series", "oracle", "cutjoin"] {
        assert_eq!(
            stdout_of(&[
                "compute", "--genus", "1", "--mu", "2,1", "--one-part", "--route", route
            ])
            .trim(),
            "3/2",
            "route {route}"
        );
    }
    let out = stdout_of(&[
        "compute",
        "--genus",
        "1",
        "--mu",
        "2,1",
        "--one-part",
        "--cross-check",
        "--format",
        "json",
    ]);
    assert!(out.contains("\"value\": \"3/2\""), "{out}");
    assert!(out.contains("cross-check("), "{out}");
}

#[test]
fn csv_format_has_stable_columns() {
    let out = stdout_of(&[
        "compute", "--genus", "0", "--mu", "3", "--one-part", "--format", "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "genus,mu,nu,orbifold,spin,value,route,micros"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("0,\"3\",\"3\",,,1/3,"), "{row}");
}

#[test]
fn table_text_and_json() {
    let text = stdout_of(&["table", "--genus", "1", "--n", "2"]);
    assert!(text.contains("d^2/24"), "{text}");
    let json = stdout_of(&["table", "--genus", "1", "--n", "2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(parsed["d_exponent"], 2);
    assert_eq!(parsed["terms"][0]["coefficient"], "-1/24");
}

#[test]
fn oracle_subcommand() {
    let out = stdout_of(&["oracle", "--genus", "0", "--mu", "2,1", "--nu", "3"]);
    assert!(out.contains("raw_count = 6"), "{out}");
    assert!(out.contains("value = 1"), "{out}");
}

#[test]
fn moduli_subcommands() {
    assert_eq!(
        stdout_of(&["moduli", "psi", "--genus", "1", "--exp", "1"]).trim(),
        "1/24"
    );
    assert_eq!(
        stdout_of(&["moduli", "hodge", "--genus", "1", "--d", "5"]).trim(),
        "1/6"
    );
    let chiodo = stdout_of(&["moduli", "chiodo-g1", "--d", "1"]);
    assert!(chiodo.contains("total = 0"), "{chiodo}");
}

#[test]
fn verify_exits_zero_and_emits_json() {
    let out = hurwitz(&["verify", "--suite", "appendix"]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("verify emits JSON");
    assert_eq!(report["failed"], 0);
    assert_eq!(report["suite"], "appendix");
}

#[test]
fn verify_out_file() {
    let dir = std::env::temp_dir().join("hurwitz-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let path_str = path.to_str().unwrap();
    let out = hurwitz(&["verify", "--suite", "section6", "--out", path_str]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&body).expect("valid json");
    assert_eq!(report["failed"], 0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn argument_errors_exit_two() {
    let out = hurwitz(&["compute", "--genus", "0", "--mu", "2,1", "--orbifold", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hurwitz(&["compute", "--genus", "0", "--mu", "nonsense", "--one-part"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hurwitz(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hurwitz(&["compute", "--genus", "0", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(2)); // no zero-profile selected
}

#[test]
fn budget_refusal_exits_one() {
    let out = hurwitz(&[
        "compute", "--genus", "2", "--mu", "1,1,1,1", "--one-part", "--route", "oracle",
        "--budget", "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("budget"), "{stderr}");
}

#[test]
fn budget_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["compute", "--genus", "2", "--mu", "1,1,1,1", "--one-part", "--route", "oracle"])
        .env("HURWITZ_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    // the explicit flag takes precedence over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args([
            "compute", "--genus", "2", "--mu", "1,1,1,1", "--one-part", "--route", "oracle",
            "--budget", "1000000000",
        ])
        .env("HURWITZ_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "416/15");
}

#[test]
fn threads_flag_does_not_change_output() {
    let one = stdout_of(&[
        "--threads", "1", "verify", "--suite", "exchange", "--gmax", "1", "--dmax", "4",
    ]);
    let four = stdout_of(&[
        "--threads", "4", "verify", "--suite", "exchange", "--gmax", "1", "--dmax", "4",
    ]);
    let mut a: serde_json::Value = serde_json::from_str(&one).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&four).unwrap();
    a["elapsed_micros"] = 0.into();
    b["elapsed_micros"] = 0.into();
    assert_eq!(a, b);
}
