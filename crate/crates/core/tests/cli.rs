//! End-to-end tests of the installed binary: exit-code contract, JSON
//! round-trips, and plot-data file emission.

use std::path::Path;
use std::process::{Command, Output};

use parajac::parajacobi::LambdaWindow;

fn parajac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parajac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn poly_para_worked_example() {
    let out = parajac(&["poly", "--para", "-n", "2", "-N", "2", "-M", "2", "--lambda", "1/2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(v["window"][0]["case"], "ii");
}

#[test]
fn poly_jacobi_trivial() {
    let out = parajac(&["poly", "--jacobi", "-n", "0", "--alpha", "2", "--beta", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["1"]));
}

#[test]
fn poly_domain_guard_exits_2() {
    let out = parajac(&["poly", "--para", "-n", "1", "-N", "2", "-M", "2", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("max(N, M)"), "stderr: {err}");
}

#[test]
fn poly_exact_mode_rejects_float_lambda() {
    let out = parajac(&["poly", "--para", "-n", "2", "-N", "2", "-M", "2", "--lambda", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn window_round_trips() {
    let out = parajac(&["window", "-n", "2", "-N", "2", "-M", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["case"], "ii");
    assert_eq!(v["intervals"], serde_json::json!([["0", "2"]]));
    assert_eq!(v["lambda_n"], "2");
    // the window sub-object re-parses into the in-memory type
    let window: LambdaWindow = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&window).unwrap()["case"], "ii");
}

#[test]
fn window_invalid_index_exits_2() {
    let out = parajac(&["window", "-n", "9", "-N", "2", "-M", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_worked_example() {
    let out = parajac(&["spectrum", "-n", "2", "-N", "2", "-M", "2", "--cutoff", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["levels"],
        serde_json::json!([[-3, "-24"], [0, "0"], [1, "24"], [2, "56"], [3, "96"]])
    );
}

#[test]
fn spectrum_cutoff_zero_has_two_levels() {
    let out = parajac(&["spectrum", "-n", "2", "-N", "2", "-M", "2", "--cutoff", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_numeric_accepts_float_lambda() {
    let out = parajac(&[
        "verify", "--suite", "numeric", "-n", "2", "-N", "2", "-M", "2", "--lambda", "1.0",
        "--grid", "200",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["checks_run"].as_u64().unwrap() > 0);
}

#[test]
fn verify_numeric_out_of_window_lambda_fails_with_1() {
    let out = parajac(&[
        "verify", "--suite", "numeric", "-n", "2", "-N", "2", "-M", "2", "--lambda", "5",
        "--grid", "200",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exact_small_sweep() {
    let out = parajac(&["verify", "--suite", "exact", "--max-NM", "2"]);
    assert!(out.status.success());
}

#[test]
fn verify_bad_sweep_bound_exits_2() {
    let out = parajac(&["verify", "--suite", "exact", "--max-NM", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plot_data_emits_expected_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = parajac(&[
        "plot-data", "-n", "2", "-N", "2", "-M", "2", "--lambdas", "1/2,1,3/2",
        "--grid", "64", "--out", dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let expected = [
        "extended_n2_N2_M2_lambda1_2.csv",
        "extended_n2_N2_M2_lambda1.csv",
        "extended_n2_N2_M2_lambda3_2.csv",
        "partner_N2_M2.csv",
    ];
    for name in expected {
        let path = dir.path().join(name);
        assert!(path.exists(), "missing {name}");
        check_curve_file(&path);
    }
    // deterministic: a second run reproduces identical bytes
    let dir2 = tempfile::tempdir().unwrap();
    let out2 = parajac(&[
        "plot-data", "-n", "2", "-N", "2", "-M", "2", "--lambdas", "1/2,1,3/2",
        "--grid", "64", "--out", dir2.path().to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    for name in expected {
        let a = std::fs::read(dir.path().join(name)).unwrap();
        let b = std::fs::read(dir2.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} not deterministic");
    }
}

fn check_curve_file(path: &Path) {
    let content = std::fs::read_to_string(path).unwrap();
    let mut lines = content.lines();
    assert_eq!(lines.next().unwrap(), "# parajac-schema 1");
    assert_eq!(lines.next().unwrap(), "# n N M lambda");
    assert!(lines.next().unwrap().starts_with("# "));
    assert_eq!(lines.next().unwrap(), "# x,V");
    let mut rows = 0;
    for line in lines {
        let (x, v) = line.split_once(',').expect("two columns");
        let x: f64 = x.parse().unwrap();
        let v: f64 = v.parse().unwrap();
        assert!(x > 0.0 && x < std::f64::consts::FRAC_PI_2);
        assert!(v.is_finite());
        rows += 1;
    }
    assert_eq!(rows, 63); // interior points of 64 subdivisions
}

#[test]
fn plot_data_partner_has_minus_ten_at_quarter_pi() {
    let dir = tempfile::tempdir().unwrap();
    let out = parajac(&[
        "plot-data", "-n", "2", "-N", "2", "-M", "2", "--lambdas", "1",
        "--grid", "512", "--out", dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(dir.path().join("partner_N2_M2.csv")).unwrap();
    let quarter_pi = std::f64::consts::FRAC_PI_4;
    let hit = content
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (x, v) = l.split_once(',').unwrap();
            (x.parse::<f64>().unwrap(), v.parse::<f64>().unwrap())
        })
        .find(|(x, _)| (x - quarter_pi).abs() < 1e-12)
        .expect("pi/4 row present");
    assert!((hit.1 + 10.0).abs() < 1e-9, "V(pi/4) = {}", hit.1);
}

#[test]
fn csv_format_for_spectrum() {
    let out = parajac(&[
        "spectrum", "-n", "2", "-N", "2", "-M", "2", "--cutoff", "1", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# parajac-schema 1\n# k,E\n-3,-24\n0,0\n1,24"), "{text}");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("window.json");
    let out = parajac(&[
        "window", "-n", "2", "-N", "2", "-M", "2", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["case"], "ii");
}
