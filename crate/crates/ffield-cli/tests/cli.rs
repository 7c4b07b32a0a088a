//! End-to-end checks of the binary: flags, exit codes, format selection,
//! determinism, and the golden report shapes.

use std::process::{Command, Output};

fn ffield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffield"))
        .args(args)
        .env_remove("FFIELD_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gcd_sum_sharpness_via_cli() {
    let out = ffield(&[
        "gcd-sum",
        "--a",
        "t^3",
        "--b",
        "-t*(t+1)",
        "--places",
        "t,t+1,inf",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lhs 2"), "{}", stdout(&out));
}

#[test]
fn cor23_json_golden() {
    let out = ffield(&[
        "--format",
        "json",
        "cor23",
        "--a",
        "t^3",
        "--b",
        "-t*(t+1)",
        "--places",
        "t,t+1,inf",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = include_str!("golden/cor23_sharpness.json");
    assert_eq!(stdout(&out), expected);
}

#[test]
fn families_csv_golden() {
    let out = ffield(&["--format", "csv", "families", "secant", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = include_str!("golden/families_secant_5.csv");
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_csv_golden() {
    let out = ffield(&["table", "three-lines", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = include_str!("golden/table_three_lines_4.csv");
    assert_eq!(stdout(&out), expected);
}

#[test]
fn deterministic_suite_reports() {
    let run = || {
        let out = ffield(&["suite", "cor23-random", "--seed", "7", "--count", "40"]);
        assert_eq!(out.status.code(), Some(0));
        stdout(&out)
    };
    let first = run();
    assert_eq!(first, run(), "same seed must give byte-identical output");
    assert!(first.contains("\"checked\": 40"));
    assert!(first.contains("\"violated\": 0"));
}

#[test]
fn randomized_suite_requires_seed() {
    let out = ffield(&["suite", "cor23-random", "--count", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_inputs_exit_2() {
    // not an S-unit
    let out = ffield(&["gcd-sum", "--a", "t-5", "--b", "t", "--places", "t,inf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("witness"));
    // parse error reports a byte offset
    let out = ffield(&["height", "--f", "t +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
    // unknown command lists the alternatives via clap
    let out = ffield(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown suite name
    let out = ffield(&["suite", "nope", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_env_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_ffield"))
        .args(["cor23", "--a", "t", "--b", "t+1", "--places", "t,t+1,inf"])
        .env("FFIELD_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("{\"check\": \"cor-2.3(i)\""));
}

#[test]
fn solution_file_roundtrip() {
    let dir = std::env::temp_dir().join("ffield-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("solution.txt");
    std::fs::write(
        &path,
        "# the constant-u2 fixture with c = 2\nlambda = 4\nu1 = t\nu2 = 3\ny = t + 2\nplaces = t, inf\n",
    )
    .unwrap();
    let out = ffield(&["solution-check", "--file", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("divisibility"));
    assert!(text.contains("dependence u1^0 * u2^1 = 3"));

    // a corrupted equation is invalid input
    std::fs::write(
        &path,
        "lambda = 4\nu1 = t\nu2 = 5\ny = t + 2\nplaces = t, inf\n",
    )
    .unwrap();
    let out = ffield(&["solution-check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witness_and_implicitize_output() {
    let out = ffield(&["witness", "--a", "t", "--b", "t+1", "--places", "t,t+1,inf"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("nonzero wronskian"));

    let out = ffield(&["implicitize", "--a", "t^2", "--b", "t^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("index 1"));
    assert!(stdout(&out).contains("total degree 3"));
}

#[test]
fn ar_scan_rows() {
    let out = ffield(&["ar-scan", "--f", "t", "--g", "t+1", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,gcd_degree,rhs_cubed,holds"));
    assert!(text.contains("6,2,")); // the n = 6 row has gcd degree 2
}

#[test]
fn fermat_command() {
    let out = ffield(&[
        "fermat", "--d", "2", "--m", "1", "--n", "1", "--p-poly", "X+Y+1", "--x", "2*t", "--y",
        "t^2", "--z", "t+1", "--places", "t,inf",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dependence"));
}

#[test]
fn prop315_command() {
    let out = ffield(&[
        "prop315",
        "--a1",
        "X-1",
        "--a2",
        "Y-1",
        "--u1",
        "t^3",
        "--u2",
        "-t*(t+1)",
        "--places",
        "t,t+1,inf",
        "--eps",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("prop-3.15"));
}
