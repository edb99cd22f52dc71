use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grover-abszeta"))
        .args(args)
        .env_remove("GROVER_ABSZETA_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON")
}

#[test]
fn period_of_u4_is_six() {
    let out = run(&["period", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "period");
    assert_eq!(v["n"], 4);
    assert!(stdout(&run(&["period", "4"])).contains("cyclotomic: 6"));
}

#[test]
fn zeta_at_rational_is_exact() {
    let out = run(&["zeta", "4", "--at", "1/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ζ(1/3) = 81/112"));
    let v = json(&run(&["--json", "zeta", "2", "--at", "1/2"]));
    // 1 / (1 + u^2) at u = 1/2
    assert_eq!(v["payload"]["value"]["result"]["value"], "4/5");
    assert_eq!(v["payload"]["value"]["result"]["method"], "exact");
}

#[test]
fn abszeta_records_carry_method_and_error() {
    let v = json(&run(&["abszeta", "2", "--central", "--json"]));
    let records = v["payload"]["records"].as_array().expect("records");
    let central = &records[0];
    for key in [
        "n",
        "operation",
        "params",
        "value_re",
        "value_im",
        "error_estimate",
        "method",
    ] {
        assert!(central.get(key).is_some(), "missing {key}");
    }
    assert_eq!(central["method"], "continuation");
    let value = central["value_re"].as_f64().unwrap();
    assert!((value - 1.4793375595943194).abs() < 1e-10);
    assert!(central["error_estimate"].as_f64().unwrap() < 1e-7);
}

#[test]
fn infinite_period_is_a_domain_error() {
    let out = run(&["abszeta", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infinite period"));
    let v = json(&run(&["abszeta", "5", "--json"]));
    assert_eq!(v["error"]["kind"], "NotFinitePeriod");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["period"]).status.code(), Some(2));
    assert_eq!(run(&["period", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["abszeta", "2", "--check-fe", "--grid", "1:0:0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["reproduce", "--only", "11"]).status.code(), Some(2));
    assert_eq!(
        run(&["--precision", "0", "period", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn functional_equation_grid_as_csv() {
    let out = run(&[
        "abszeta",
        "2",
        "--check-fe",
        "--grid",
        "-1.5:1:0.5",
        "--csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,lhs,rhs,residual"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 6);
    for r in &rows {
        assert_eq!(r.len(), 4);
        if r[0] == 0.0 {
            // ζ(D - s) has a pole at s = 0, so the row is not evaluable.
            assert!(r[3].is_nan());
        } else {
            assert!(r[3] < 1e-6, "{r:?}");
        }
    }
}

#[test]
fn config_file_is_overridden_by_flags() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# test config\nprecision = 5\nlmax = 80").unwrap();
    let path = file.path().to_str().unwrap();

    let v = json(&run(&["--config", path, "--json", "period", "2"]));
    assert_eq!(v["precision_config"]["precision"], 5);
    assert_eq!(v["precision_config"]["lmax"], 80);

    let v = json(&run(&[
        "--config", path, "--lmax", "120", "--json", "period", "2",
    ]));
    assert_eq!(v["precision_config"]["lmax"], 120);
    assert_eq!(v["precision_config"]["precision"], 5);

    let via_env = Command::new(env!("CARGO_BIN_EXE_grover-abszeta"))
        .args(["--json", "period", "2"])
        .env("GROVER_ABSZETA_CONFIG", path)
        .output()
        .unwrap();
    assert_eq!(json(&via_env)["precision_config"]["precision"], 5);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "colour = red").unwrap();
    let out = run(&["--config", bad.path().to_str().unwrap(), "period", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_exit_codes_follow_the_tolerance_scale() {
    let ok = run(&["reproduce", "--only", "4,7", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(v["payload"]["summary"]["all_passed"], true);
    assert_eq!(v["payload"]["claims"].as_array().unwrap().len(), 2);

    let strict = run(&["reproduce", "--only", "7", "--tolerance-scale", "1e-12"]);
    assert_eq!(strict.status.code(), Some(3));
    assert!(stdout(&strict).contains("FAIL"));
}

#[test]
fn series_with_mellin_check() {
    let v = json(&run(&[
        "series", "3", "--w", "6", "--s", "5", "--mellin", "--json",
    ]));
    let records = v["payload"]["records"].as_array().unwrap();
    assert_eq!(records[0]["method"], "series");
    assert_eq!(records[1]["method"], "quadrature");
    let a = records[0]["value_re"].as_f64().unwrap();
    let b = records[1]["value_re"].as_f64().unwrap();
    assert!((a - 2.779098453507405e-6).abs() < 1e-12);
    assert!((b - 2.779098453507405e-6).abs() < 1e-12);
}

#[test]
fn product_mode_reports_its_caveat() {
    let v = json(&run(&["series", "4", "--s", "1", "--product", "--json"]));
    let product = &v["payload"]["truncated_product"];
    assert_eq!(product["non_convergent"], true);
    assert_eq!(product["method"], "series");
    assert!(product["error_estimate"].is_null());
    assert!(product["caveat"]
        .as_str()
        .unwrap()
        .contains("do not converge"));
    assert_eq!(product["factors"][0]["offset"], 4);
    assert_eq!(product["factors"][0]["exponent"], "-1");
}
