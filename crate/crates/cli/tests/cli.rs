//! End-to-end tests of the `fdl` binary: schemas, exit codes, determinism.

use std::process::{Command, Output};

fn fdl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdl"))
        .args(args)
        .env_remove("FDL_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn csv_column(text: &str, name: &str) -> Vec<f64> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let index = header
        .iter()
        .position(|&h| h == name)
        .unwrap_or_else(|| panic!("column {name}"));
    lines
        .map(|line| {
            let field = line.split(',').nth(index).expect("field");
            field.parse().unwrap_or(f64::NAN)
        })
        .collect()
}

#[test]
fn sweep_fig1_matches_the_closed_form() {
    let output = fdl(&["sweep", "--channel", "adc", "--initial", "fig1", "--steps", "5"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("p,C2_ab,C2_E_ab,C2_a_Eb,neg_aE,epsilon_nats,Q1,Q2,Qinf,R_a,R_E\n"));
    let p = csv_column(&text, "p");
    let c2_ab = csv_column(&text, "C2_ab");
    assert_eq!(p.len(), 5);
    for (pk, ck) in p.iter().zip(&c2_ab) {
        assert!((ck - (1.0 - pk) * (1.0 - pk)).abs() <= 1e-10);
    }
}

#[test]
fn sweep_expression_generates_entanglement() {
    let output = fdl(&["sweep", "--channel", "adc", "--initial", "1|2,1>", "--steps", "3"]);
    assert!(output.status.success());
    let c2_ab = csv_column(&stdout(&output), "C2_ab");
    assert!((c2_ab[0] - 0.0).abs() <= 1e-12);
    assert!((c2_ab[1] - 0.25).abs() <= 1e-10);
    assert!((c2_ab[2] - 1.0).abs() <= 1e-10);
}

#[test]
fn sweep_fig3_has_separable_reduction_and_linear_residuals() {
    let output = fdl(&[
        "sweep", "--channel", "pdc", "--initial", "fig3", "--steps", "11", "--log-base", "2",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    for value in csv_column(&text, "neg_aE") {
        assert!(value.abs() < 1e-11);
    }
    let p = csv_column(&text, "p");
    for (pk, r) in p.iter().zip(csv_column(&text, "R_a")) {
        assert!((r - pk).abs() <= 1e-9, "R_a at p={pk}");
    }
}

#[test]
fn ghz_check_is_a_single_endpoint_row() {
    let output = fdl(&["sweep", "--channel", "pdc", "--initial", "ghz-check", "--steps", "50"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 2);
    assert_eq!(csv_column(&text, "p"), vec![1.0]);
    let r_e = csv_column(&text, "R_E");
    assert!((r_e[0] - 1.0).abs() <= 1e-10);
}

#[test]
fn sweep_output_is_byte_identical_across_runs() {
    let args = [
        "sweep", "--channel", "adc", "--initial", "fig2", "--steps", "21", "--log-base", "2",
    ];
    let first = fdl(&args);
    let second = fdl(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let path_arg = path.to_str().unwrap();
    let mut file_args: Vec<&str> = args.to_vec();
    file_args.extend_from_slice(&["--out", path_arg]);
    assert!(fdl(&file_args).status.success());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
}

#[test]
fn json_format_mirrors_the_csv_fields() {
    let output = fdl(&[
        "sweep", "--channel", "adc", "--initial", "fig1", "--steps", "3", "--format", "json",
    ]);
    assert!(output.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let mid = &rows[1];
    assert_eq!(mid["p"], 0.5);
    assert!(mid["R_a"].is_null());
    assert!((mid["C2_a_Eb"].as_f64().unwrap() - 0.75).abs() <= 1e-10);
    for key in ["C2_ab", "C2_E_ab", "neg_aE", "epsilon_nats", "Q1", "Q2", "Qinf", "R_E"] {
        assert!(mid.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn parse_errors_exit_2() {
    let output = fdl(&["sweep", "--channel", "adc", "--initial", "abc|2,0>", "--steps", "3"]);
    assert_eq!(output.status.code(), Some(2));
    let output = fdl(&["sweep", "--channel", "adc", "--initial", "1|7,0>", "--steps", "3"]);
    assert_eq!(output.status.code(), Some(2));
    // clap rejects a 1-point grid with its usage exit code
    let output = fdl(&["sweep", "--channel", "adc", "--initial", "fig1", "--steps", "1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn non_normalized_states_exit_3_without_the_flag() {
    let args = ["sweep", "--channel", "pdc", "--initial", "1|2,0> + 1|0,0>", "--steps", "3"];
    let output = fdl(&args);
    assert_eq!(output.status.code(), Some(3));

    let mut fixed: Vec<&str> = args.to_vec();
    fixed.push("--normalize");
    let output = fdl(&fixed);
    assert!(output.status.success());
    // normalized, this is the Slater determinant: zero tangle for every p
    for value in csv_column(&stdout(&output), "C2_ab") {
        assert!(value.abs() <= 1e-10);
    }
}

#[test]
fn basis_reproduces_the_table() {
    let output = fdl(&["basis"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.matches("C = 1.000000").count(), 2);
    assert_eq!(text.matches("C = 0.000000").count(), 4);
    assert!(text.contains("0.7071067812"));
    assert!(text.contains("+0.5000000000i|14>"));
}

#[test]
fn verify_passes_and_honors_the_tolerance_override() {
    let output = fdl(&["verify", "--suite", "all"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("PASS basis-table"));
    assert!(!text.contains("FAIL"));

    let output = Command::new(env!("CARGO_BIN_EXE_fdl"))
        .args(["verify", "--suite", "paper"])
        .env("FDL_TOLERANCE", "1e-30")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL"));

    let output = Command::new(env!("CARGO_BIN_EXE_fdl"))
        .args(["verify", "--suite", "paper"])
        .env("FDL_TOLERANCE", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}
