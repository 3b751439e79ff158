//! End-to-end checks of the binary: exit-code contract (0 success,
//! 1 mathematical failure, 2 usage error), output formats, and the
//! file-selector round trip.

mod common;

use common::*;

use radford::hopf::HopfAlgebra;
use radford::zoo;

#[test]
fn check_reports_eight_passes() {
    let (code, stdout, _) = run_cli(&["check", "--algebra", "radford:5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.starts_with("PASS ")));
    for name in [
        "associativity",
        "unit",
        "coassociativity",
        "counit",
        "comult-algebra-map",
        "counit-algebra-map",
        "antipode-left",
        "antipode-right",
    ] {
        assert!(stdout.contains(name), "missing check {name}");
    }
}

#[test]
fn check_rejects_non_prime_with_usage_exit() {
    let (code, _, stderr) = run_cli(&["check", "--algebra", "radford:4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("4 is not prime"), "stderr: {stderr}");
}

#[test]
fn check_flags_broken_antipode_with_witness() {
    // R(3) with the antipode replaced by the identity matrix fails the
    // antipode axioms, first at the skew-primitive x
    let h = radford_algebra(3);
    let broken = HopfAlgebra::from_parts_unverified(
        h.modulus(),
        h.basis_labels().to_vec(),
        h.mult_tensor().clone(),
        h.unit_vector().clone(),
        h.comult_tensor().clone(),
        h.counit_vector().clone(),
        h.identity_operator(),
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    zoo::save_algebra(&broken, &path).unwrap();

    let selector = format!("file:{}", path.display());
    let (code, stdout, _) = run_cli(&["check", "--algebra", &selector]);
    assert_eq!(code, 1);
    assert!(
        stdout.contains("FAIL antipode-left (witness: x)"),
        "stdout: {stdout}"
    );
    assert!(stdout.contains("FAIL antipode-right"), "stdout: {stdout}");
    assert!(stdout.contains("PASS associativity"), "stdout: {stdout}");
}

#[test]
fn indicators_csv_and_table() {
    let (code, stdout, _) = run_cli(&[
        "indicators",
        "--algebra",
        "radford:3",
        "--count",
        "7",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,1,0,1,1,0,1\n");

    let (code, stdout, _) = run_cli(&[
        "indicators",
        "--algebra",
        "radford:3",
        "--count",
        "3",
        "--format",
        "table",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 4); // header + 3 rows
    assert!(lines[1].trim_start().starts_with("1"));
}

#[test]
fn indicators_json_schema() {
    let (code, stdout, _) = run_cli(&[
        "indicators",
        "--algebra",
        "radford:5",
        "--count",
        "20",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["p"], 5);
    assert_eq!(v["dim"], 25);
    assert_eq!(v["method"], "both");
    assert_eq!(v["nu"].as_array().unwrap().len(), 20);
    assert_eq!(v["period"], 5);
    assert_eq!(
        v["minpoly"],
        serde_json::json!([4, 0, 0, 0, 0, 1]) // x^5 - 1
    );
    assert!(v["verified_window"].as_u64().unwrap() >= 75);
    assert!(v["algebra"].as_str().unwrap().len() == 16);
}

#[test]
fn indicators_short_run_has_null_period() {
    // 7 terms cannot confirm three periods of length 3
    let (code, stdout, _) = run_cli(&[
        "indicators",
        "--algebra",
        "radford:3",
        "--count",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["period"], serde_json::Value::Null);
}

#[test]
fn integrals_output_formats() {
    let (code, stdout, _) = run_cli(&[
        "integrals",
        "--algebra",
        "radford:3",
        "--side",
        "left",
        "--space",
        "dual",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1·δ(g x^2)\n");

    let (code, stdout, _) = run_cli(&[
        "integrals",
        "--algebra",
        "group:c3:5",
        "--side",
        "right",
        "--space",
        "primal",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1·e + 1·a + 1·a^2\n");
}

#[test]
fn minpoly_output_lines() {
    let (code, stdout, _) = run_cli(&["minpoly", "--algebra", "radford:5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "degree: 5");
    assert_eq!(lines[1], "coefficients: 4,0,0,0,0,1");
    assert_eq!(lines[2], "pretty: x^5 + 4");
    assert!(lines[3].starts_with("verified_window: "));
}

#[test]
fn free_check_rejects_composite_prime() {
    let (code, _, stderr) = run_cli(&["free-check", "--prime", "6", "--max-degree", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not prime"));
}

#[test]
fn bad_selectors_are_usage_errors() {
    for selector in ["nonsense", "radford:abc", "group:c3", "group:q8:5", "dual:bogus"] {
        let (code, _, stderr) = run_cli(&["check", "--algebra", selector]);
        assert_eq!(code, 2, "selector {selector}: {stderr}");
    }
    // missing file
    let (code, _, _) = run_cli(&["check", "--algebra", "file:/no/such/file.json"]);
    assert_eq!(code, 2);
    // clap usage error
    let (code, _, _) = run_cli(&["indicators", "--algebra", "radford:3", "--method", "guess"]);
    assert_eq!(code, 2);
}

#[test]
fn export_then_reload_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    let (code, _, _) = run_cli(&[
        "export",
        "--algebra",
        "group:c4:3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    let selector = format!("file:{}", path.display());
    let (code, stdout, _) = run_cli(&[
        "indicators",
        "--algebra",
        &selector,
        "--count",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    // |{g in C_4 : g^n = e}| mod 3: 1, 2, 1, 4, 1, 2, 1, 4 reduced mod 3
    assert_eq!(stdout, "1,2,1,1,1,2,1,1\n");

    // the in-process loader agrees tensor-for-tensor
    let loaded = zoo::load_algebra(&path).unwrap();
    let rebuilt = cyclic_group_algebra(4, 3);
    assert_eq!(loaded, rebuilt);
}

#[test]
fn dual_command_emits_a_loadable_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual_r3.json");
    let (code, _, _) = run_cli(&[
        "dual",
        "--algebra",
        "radford:3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let loaded = zoo::load_algebra(&path).unwrap();
    assert!(loaded.is_verified());
    let direct = radford_algebra(3).dualize().unwrap();
    assert!(loaded.same_tensors(&direct));
}
