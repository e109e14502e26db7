//! End-to-end CLI behavior: exit codes, output formats, determinism, and
//! schema conformance.

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn qinfo() -> Command {
    let mut cmd = Command::cargo_bin("qinfo").expect("binary builds");
    cmd.env_remove("QINFO_CONFIG");
    cmd
}

#[test]
fn invalid_quantum_numbers_exit_2() {
    qinfo()
        .args(["measure", "--n", "2", "--l", "2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("l must satisfy l <= n-1"));
}

#[test]
fn unknown_measure_exit_2() {
    qinfo()
        .args(["measure", "--n", "1", "--measures", "nope"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown measure"));
}

#[test]
fn conflicting_selectors_exit_2() {
    qinfo()
        .args(["measure", "--n", "1", "--dim", "3", "--alpha", "0.0073"])
        .assert()
        .code(2);
}

#[test]
fn ground_state_cfs_matches_constant() {
    let out = qinfo()
        .args([
            "measure",
            "--n",
            "1",
            "--l",
            "0",
            "--m",
            "0",
            "--Z",
            "1",
            "--measures",
            "cfs",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &v["measures"][0];
    assert_eq!(entry["name"], "cfs");
    let numeric = entry["numeric"].as_f64().unwrap();
    let reference = 2.0 * std::f64::consts::E / std::f64::consts::PI.powf(1.0 / 3.0);
    assert!((numeric - reference).abs() / reference < 1e-9);
    assert!(entry["analytic"].as_f64().is_some());
}

#[test]
fn unit_entropic_moment() {
    let out = qinfo()
        .args(["measure", "--n", "1", "--measures", "w:q=1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let numeric = v["measures"][0]["numeric"].as_f64().unwrap();
    assert!((numeric - 1.0).abs() < 1e-10);
}

#[test]
fn csv_format_invariants() {
    let out = qinfo()
        .args([
            "measure",
            "--n",
            "2",
            "--l",
            "1",
            "--measures",
            "v,f,s",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.ends_with("\n\n"));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,numeric,analytic,abs_dev,rel_dev"));
    for line in text.lines() {
        assert_eq!(line, line.trim_end(), "trailing whitespace in {line:?}");
        assert_eq!(line.split(',').count(), 5, "fixed column order in {line:?}");
        // locale-independent decimal points only
        assert!(!line.contains(';') && !line.contains("0,5"), "{line:?}");
    }
    // the three requested measures, in request order
    let names: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(names, ["v", "f", "s"]);
}

#[test]
fn dimension_selector_reports_lmc() {
    let out = qinfo()
        .args(["measure", "--n", "1", "--dim", "2", "--measures", "clmc"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let numeric = v["measures"][0]["numeric"].as_f64().unwrap();
    let expected = (std::f64::consts::E / 2.0).powi(2);
    assert!((numeric - expected).abs() / expected < 1e-7);
    assert_eq!(v["state"]["kind"], "circular_d");
}

#[test]
fn pionic_selector_reports_energy_and_cfs() {
    let out = qinfo()
        .args([
            "measure",
            "--n",
            "1",
            "--Z",
            "30",
            "--alpha",
            "0.007297352573756914",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = v["measures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["energy", "s", "cfs"]);
    let energy = v["measures"][0]["numeric"].as_f64().unwrap();
    assert!(energy > 0.9 && energy < 1.0);
}

#[test]
fn pionic_supercritical_exit_2() {
    qinfo()
        .args([
            "measure",
            "--n",
            "1",
            "--Z",
            "69",
            "--alpha",
            "0.007297352573756914",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("supercritical"));
}

#[test]
fn figure1_deterministic_and_increasing() {
    let one = qinfo()
        .args(["figure", "fig1", "--format", "csv"])
        .output()
        .unwrap();
    let two = qinfo()
        .args(["figure", "fig1", "--format", "csv"])
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout, "reruns must be byte-identical");
    let text = String::from_utf8(one.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,c_fs"));
    let values: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 8);
    let reference = 2.0 * std::f64::consts::E / std::f64::consts::PI.powf(1.0 / 3.0);
    assert!((values[0] - reference).abs() < 1e-6);
    for pair in values.windows(2) {
        assert!(pair[1] > pair[0], "fig1 column must increase");
    }
}

#[test]
fn figure3_first_row_and_bounds() {
    let out = qinfo()
        .args(["figure", "fig3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,D,c_lmc"));
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 3 * 11); // n in {1,2,3}, D in 2..=12
    let first: f64 = rows[0][2].parse().unwrap();
    assert!((first - 1.8472640247326624).abs() < 1e-4);
    for row in &rows {
        let c: f64 = row[2].parse().unwrap();
        assert!(c >= 1.0, "LMC below its lower bound in {row:?}");
    }
}

#[test]
fn figure2_respects_config_and_rejects_supercritical_range() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("ok.toml");
    std::fs::write(&good, "[figures]\nz_values = [5.0, 25.0]\n").unwrap();
    let out = qinfo()
        .env("QINFO_CONFIG", &good)
        .args(["figure", "fig2", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("Z,c_fs_kg,c_fs_schrodinger"));
    assert_eq!(lines.count(), 2);

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[figures]\nz_values = [10.0, 70.0]\n").unwrap();
    qinfo()
        .env("QINFO_CONFIG", &bad)
        .args(["figure", "fig2", "--format", "csv"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("supercritical"));
}

#[test]
fn plot_script_emitted_next_to_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig1.csv");
    qinfo()
        .args(["figure", "fig1", "--format", "csv", "--plot-script"])
        .arg("--out")
        .arg(&csv)
        .assert()
        .success();
    assert!(csv.exists());
    let script = std::fs::read_to_string(dir.path().join("fig1.gnuplot")).unwrap();
    assert!(script.contains("fig1.csv"));
    assert!(script.contains("plot"));
}

#[test]
fn quadrature_overrides_accepted() {
    qinfo()
        .args([
            "measure",
            "--n",
            "1",
            "--measures",
            "s",
            "--nodes-radial",
            "64",
            "--nodes-angular",
            "32",
            "--tol",
            "1e-8",
        ])
        .assert()
        .success();
    // absurd override is rejected up front
    qinfo()
        .args(["measure", "--n", "1", "--nodes-radial", "1"])
        .assert()
        .code(2);
}

#[test]
fn verify_fast_prints_table_with_documented_red() {
    let out = qinfo().args(["verify", "fast"]).output().unwrap();
    // rydberg-entropy is the documented defect: exit 1, everything else PASS.
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let pass = text.lines().filter(|l| l.starts_with("[PASS]")).count();
    let fail: Vec<&str> = text.lines().filter(|l| l.starts_with("[FAIL]")).collect();
    assert_eq!(pass, 9, "nine criteria green:\n{text}");
    assert_eq!(fail.len(), 1, "exactly the documented red:\n{text}");
    assert!(fail[0].contains("rydberg-entropy"));
    assert!(text.contains("errata ledger entries exercised"));
}

// ---------------------------------------------------------------------------
// schema conformance
// ---------------------------------------------------------------------------

/// Validates a JSON value against the subset of JSON Schema used by the
/// shipped schema file (type / required / properties / items / enum).
fn validate(instance: &Value, schema: &Value, path: &str, errors: &mut Vec<String>) {
    if let Some(types) = schema.get("type") {
        let allowed: Vec<String> = match types {
            Value::String(s) => vec![s.clone()],
            Value::Array(a) => a
                .iter()
                .map(|v| v.as_str().unwrap_or_default().to_string())
                .collect(),
            _ => vec![],
        };
        let actual = match instance {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) => {
                if n.is_u64() || n.is_i64() {
                    "integer"
                } else {
                    "number"
                }
            }
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        // JSON Schema treats integers as numbers too.
        let ok = allowed.iter().any(|t| t == actual)
            || (actual == "integer" && allowed.iter().any(|t| t == "number"));
        if !ok {
            errors.push(format!("{path}: type {actual} not in {allowed:?}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().unwrap();
            if instance.get(key).is_none() {
                errors.push(format!("{path}: missing required key `{key}`"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(value) = instance.get(key) {
                validate(value, sub, &format!("{path}.{key}"), errors);
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = instance.as_array() {
            for (i, value) in array.iter().enumerate() {
                validate(value, items, &format!("{path}[{i}]"), errors);
            }
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(instance) {
            errors.push(format!("{path}: {instance} not in enum {allowed:?}"));
        }
    }
}

#[test]
fn json_output_validates_against_shipped_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schema/measure_report.schema.json")).unwrap();
    for args in [
        vec!["measure", "--n", "3", "--l", "2", "--m", "-1"],
        vec!["measure", "--n", "2", "--dim", "5"],
        vec![
            "measure",
            "--n",
            "1",
            "--Z",
            "10",
            "--alpha",
            "0.007297352573756914",
        ],
    ] {
        let out = qinfo().args(&args).output().unwrap();
        assert!(out.status.success(), "{args:?}");
        let instance: Value = serde_json::from_slice(&out.stdout).unwrap();
        let mut errors = Vec::new();
        validate(&instance, &schema, "$", &mut errors);
        assert!(errors.is_empty(), "{args:?}: {errors:#?}");
    }
}

#[test]
fn numeric_failure_exit_3() {
    // A config with zero panel depth cannot integrate entropy-type
    // integrands; the failure is reported as a numeric error.
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("broken.toml");
    std::fs::write(&cfg, "[quadrature]\nmax_panel_depth = 0\n").unwrap();
    qinfo()
        .env("QINFO_CONFIG", &cfg)
        .args(["measure", "--n", "1", "--measures", "s"])
        .assert()
        .code(3)
        .stderr(predicate::str::contains("numeric failure"));
}
