use assert_cmd::Command;
use serde_json::Value;

fn legfrac(args: &[&str]) -> assert_cmd::assert::Assert {
    Command::cargo_bin("legfrac").unwrap().env_remove("LEGFRAC_QUAD_NODES").args(args).assert()
}

fn stdout_json(args: &[&str]) -> Vec<Value> {
    let out = legfrac(args).success().get_output().stdout.clone();
    let v: Value = serde_json::from_slice(&out).expect("stdout is one JSON document");
    v.as_array().expect("top-level array").clone()
}

fn stderr(a: &assert_cmd::assert::Assert) -> String {
    String::from_utf8(a.get_output().stderr.clone()).unwrap()
}

fn num(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or_else(|| panic!("{key} missing in {v}"))
}

#[test]
fn eval_p00_is_one() {
    let rows = stdout_json(&["eval", "--kind", "P", "--nu", "0", "--mu", "0", "--z", "2.3", "--format", "json"]);
    assert_eq!(rows.len(), 1);
    assert_eq!(num(&rows[0], "value_re"), 1.0);
    assert_eq!(num(&rows[0], "value_im"), 0.0);
}

#[test]
fn verify_structural_passes() {
    let a = legfrac(&["verify", "--filter", "structural", "--seed", "1", "--draws", "5"]).code(0);
    let out = String::from_utf8(a.get_output().stdout.clone()).unwrap();
    assert!(out.lines().last().unwrap().starts_with("all passed"), "{out}");
}

#[test]
fn verify_fails_with_exit_one() {
    // a tolerance no floating-point evaluation can meet
    legfrac(&["verify", "--filter", "whipple", "--draws", "2", "--tolerance", "1e-300"]).code(1);
}

#[test]
fn printed_variants_do_not_fail_verify() {
    let a = legfrac(&["verify", "--filter", "variant", "--reference"]).code(0);
    let out = String::from_utf8(a.get_output().stdout.clone()).unwrap();
    assert!(out.contains("printed variants differing"), "{out}");
}

#[test]
fn verify_report_file() {
    let dir = std::env::temp_dir().join(format!("legfrac-report-{}", std::process::id()));
    let path = dir.with_extension("txt");
    legfrac(&["verify", "--filter", "q-symmetry", "--draws", "3", "--report", path.to_str().unwrap()]).code(0);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# legfrac-report v1"));
    let first: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(first["id"], "q-symmetry");
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn limits_decay_like_one_over_nu() {
    let rows = stdout_json(&["limits", "--mu", "0.4", "--theta", "1.0", "--nu-sweep", "1e2,1e3,1e4", "--format", "json"]);
    assert_eq!(rows.len(), 3);
    let rel: Vec<f64> = rows.iter().map(|r| num(r, "rel_diff")).collect();
    assert!(rel[0] > rel[1] && rel[1] > rel[2], "{rel:?}");
    for w in rel.windows(2) {
        let ratio = w[0] / w[1];
        assert!((8.0..12.5).contains(&ratio), "ratio {ratio}");
    }
    assert!(rows[0]["decay_ratio"].is_null());
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["eval", "--kind", "P", "--nu", "0", "--z", "2"][..],
        &["eval", "--kind", "P", "--nu", "1+", "--mu", "0", "--z", "2"],
        &["eval", "--kind", "P", "--nu", "0", "--mu", "0", "--z", "0.5"],
        &["table", "--kind", "P", "--nu", "0", "--mu", "0", "--start", "2", "--stop", "3", "--count", "0"],
        &["verify", "--filter", "no-such-tag"],
        &["verify", "--tolerance", "0"],
        &["genfun", "--family", "legendre-p", "--z", "1.5", "--u", "0.9"],
        &["limits", "--mu", "0.4", "--theta", "1", "--nu-sweep", "10"],
        &["frobnicate"],
    ] {
        let a = legfrac(args).code(2);
        let err = stderr(&a);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("legfrac: "), "{err}");
        assert!(a.get_output().stdout.is_empty(), "{args:?} wrote to stdout");
    }
}

#[test]
fn numerical_failure_exits_three() {
    let a = legfrac(&["eval", "--kind", "Q", "--nu", "0.3", "--mu", "0.2", "--z", "2", "--op", "mplus", "--lambda", "0.6", "--quad-tol", "1e-300"]).code(3);
    assert!(stderr(&a).contains("numerical failure"));
}

#[test]
fn complex_literals() {
    let rows = stdout_json(&["eval", "--kind", "Q", "--nu", "0.3+0.4i", "--mu", "-2i", "--z", "1.5-0.25i", "--format", "json"]);
    let r = &rows[0];
    assert_eq!((num(r, "nu_re"), num(r, "nu_im")), (0.3, 0.4));
    assert_eq!((num(r, "mu_re"), num(r, "mu_im")), (0.0, -2.0));
    assert_eq!((num(r, "z_re"), num(r, "z_im")), (1.5, -0.25));
}

#[test]
fn csv_and_json_carry_the_same_values() {
    let common = ["table", "--kind", "Q", "--nu", "0.7", "--mu", "0.3", "--start", "1.2", "--stop", "3+1i", "--count", "5"];
    let json = stdout_json(&[&common[..], &["--format", "json"]].concat());
    let csv = legfrac(&[&common[..], &["--format", "csv"]].concat()).success().get_output().stdout.clone();
    let csv = String::from_utf8(csv).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), json.len());
    for (row, rec) in rows.iter().zip(&json) {
        for (k, cell) in header.iter().zip(row) {
            let v = &rec[*k];
            match v {
                Value::Number(_) => assert_eq!(cell.parse::<f64>().unwrap().to_bits(), v.as_f64().unwrap().to_bits(), "{k}"),
                Value::String(s) => assert_eq!(cell, s),
                Value::Null => assert!(cell.is_empty()),
                other => panic!("unexpected {other}"),
            }
        }
    }
}

#[test]
fn json_records_reevaluate_bit_exactly() {
    let rows = stdout_json(&[
        "table", "--kind", "P", "--nu", "0.45", "--mu", "0.25", "--op", "mplus", "--lambda", "0.35", "--start", "1.3", "--stop", "2.9+0.7i", "--count", "3",
        "--format", "json",
    ]);
    for r in &rows {
        let lit = |re: &str, im: &str| format!("{}{:+}i", num(r, re), num(r, im));
        let again = stdout_json(&[
            "eval",
            "--kind",
            r["kind"].as_str().unwrap(),
            "--nu",
            &lit("nu_re", "nu_im"),
            "--mu",
            &lit("mu_re", "mu_im"),
            "--op",
            r["op"].as_str().unwrap(),
            "--lambda",
            &lit("lambda_re", "lambda_im"),
            "--z",
            &lit("z_re", "z_im"),
            "--format",
            "json",
        ]);
        for k in ["value_re", "value_im"] {
            assert_eq!(num(&again[0], k).to_bits(), num(r, k).to_bits(), "{k}");
        }
    }
}

#[test]
fn genfun_partial_sums_converge() {
    let rows = stdout_json(&[
        "genfun", "--family", "order-raise", "--kind", "Q", "--nu", "0.3", "--mu", "0.2", "--z", "2", "--u", "0.1", "--terms", "5,10,20,40", "--format", "json",
    ]);
    let rel: Vec<f64> = rows.iter().map(|r| num(r, "rel_diff")).collect();
    assert!(rel[0] > rel[1] && rel[1] > rel[2], "{rel:?}");
    assert!(rel[3] < 1e-13, "{rel:?}");
}

#[test]
fn on_cut_table_and_env_override() {
    let rows = stdout_json(&["table", "--kind", "p-cut", "--nu", "0.5", "--mu", "0.3", "--start", "-0.9", "--stop", "0.9", "--count", "4", "--format", "json"]);
    assert_eq!(rows.len(), 4);
    assert_eq!(num(&rows[3], "z_re"), 0.9);
    let out = Command::cargo_bin("legfrac")
        .unwrap()
        .env("LEGFRAC_QUAD_NODES", "80")
        .args(["eval", "--kind", "Q", "--nu", "0.3", "--mu", "0.2", "--z", "2", "--op", "k3", "--lambda", "0.5", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert!(v[0]["value_re"].is_number());
}

#[test]
fn help_mentions_literal_grammar() {
    let a = legfrac(&["--help"]).code(0);
    let out = String::from_utf8(a.get_output().stdout.clone()).unwrap();
    assert!(out.contains("0.3+0.4i"));
}
