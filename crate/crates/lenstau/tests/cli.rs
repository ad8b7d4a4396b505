//! End-to-end runs of the installed binary: JSON output shapes, exit
//! codes, and report determinism.

use std::process::Command;

fn lenstau(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lenstau"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn lens_space_invariant_round_trips_as_json() {
    let out = lenstau(&["compute", "lens", "--n", "2", "--r", "5", "--b", "1"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["r"], 5);
    assert_eq!(value["coeffs"][0], "1");
    assert!(value["coeffs"].as_array().unwrap().iter().skip(1).all(|c| c == "0"));
}

#[test]
fn closed_and_surgery_paths_agree() {
    let surgery = lenstau(&["compute", "lens", "--n", "2", "--r", "7", "--b", "2"]);
    let closed = lenstau(&["compute", "lens", "--n", "2", "--r", "7", "--b", "2", "--closed"]);
    assert!(surgery.status.success() && closed.status.success());
    assert_eq!(surgery.stdout, closed.stdout);
}

#[test]
fn series_prints_rational_coefficients() {
    let out = lenstau(&[
        "compute", "series", "--n", "2", "--r", "5", "--framings", "2", "--order", "4",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["order"], 4);
    assert_eq!(value["coeffs"][0], "-1/2");
    assert_eq!(value["coeffs"][4], "57/4096");
}

#[test]
fn negative_framings_parse() {
    let out = lenstau(&[
        "compute", "series", "--n", "2", "--r", "7", "--framings", "3,-2", "--order", "2",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_passes_and_writes_deterministic_report() {
    let dir = std::env::temp_dir();
    let path_a = dir.join("lenstau_report_a.json");
    let path_b = dir.join("lenstau_report_b.json");
    for path in [&path_a, &path_b] {
        let out = lenstau(&[
            "verify",
            "--suite",
            "congruence",
            "--n",
            "2",
            "--r",
            "11",
            "--framings",
            "2",
            "--framings",
            "3,-2",
            "--seed",
            "5",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("PASS congruence::tau_congruence"));
        assert!(text.lines().last().unwrap().contains("0 failed"));
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b, "same config and seed must serialize identically");
    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["summary"]["failed"], "0");
}

#[test]
fn verify_skips_out_of_range_grid_points() {
    let out = lenstau(&["verify", "--suite", "gauss", "--n", "3", "--r", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SKIP"), "r = 3 grid points should skip, got:\n{text}");
}

#[test]
fn exit_codes_separate_usage_from_computation_errors() {
    // missing required argument: usage error
    let usage = lenstau(&["compute", "lens", "--n", "2"]);
    assert_eq!(usage.status.code(), Some(2));
    // r = 9 is not prime: computation error
    let bad = lenstau(&["compute", "lens", "--n", "2", "--r", "9", "--b", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("odd prime"));
    // unknown suite name: usage error from the value parser
    let suite = lenstau(&["verify", "--suite", "nonsense"]);
    assert_eq!(suite.status.code(), Some(2));
}

#[test]
fn help_lists_the_subcommands() {
    let out = lenstau(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("compute"));
    assert!(text.contains("verify"));
}
