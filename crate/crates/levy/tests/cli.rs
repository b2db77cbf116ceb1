use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("levy").chain(args.iter().copied());
    let code = levy::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, _) = run(&full);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn euler_rows() {
    let (code, v) = json(&["euler", "--n-max", "8"]);
    assert_eq!(code, 0);
    let a: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["A_n"].as_str().unwrap())
        .collect();
    assert_eq!(a, ["1", "1", "1", "2", "5", "16", "61", "272", "1385"]);
    let (_, v) = json(&["euler", "--n-max", "0"]);
    assert_eq!(v["rows"][0]["A_n"], "1");
}

#[test]
fn euler_check_catches_injected_fault() {
    assert_eq!(run(&["euler", "--n-max", "9", "--check"]).0, 0);
    let (code, out, _) = run(&["euler", "--n-max", "9", "--check", "--inject-fault", "euler"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("FAIL\n"));
}

#[test]
fn moments_all_routes() {
    let (code, v) = json(&["moments", "--n-max", "4", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[2]["w_n"], "2");
    assert_eq!(rows[2]["moment"], "1/4");
    assert_eq!(rows[4]["w_n"], "120");
    assert_eq!(rows[4]["moment"], "5/16");
    assert_eq!(rows[3]["moment"], "0");
}

#[test]
fn moments_over_cap_are_refused() {
    let (code, out, err) = run(&["moments", "--n-max", "9", "--method", "direct"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("cap of 8"), "{err}");
    assert_eq!(run(&["moments", "--interval-length", "0"]).0, 2);
    assert_eq!(run(&["moments", "--interval-length", "x"]).0, 2);
}

#[test]
fn moments_with_interval_length() {
    let (_, v) = json(&[
        "moments",
        "--n-max",
        "2",
        "--interval-length",
        "2",
        "--method",
        "digraph",
    ]);
    assert_eq!(v["rows"][2]["moment"], "1");
    assert_eq!(v["params"]["method"], "digraph");
}

#[test]
fn sech_coefficients() {
    let (code, v) = json(&["sech", "--order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"][0]["c_k"], "1");
    assert_eq!(v["rows"][2]["c_k"], "-1/2");
    assert_eq!(v["rows"][6]["c_k"], "-61/720");
}

#[test]
fn formats_carry_the_same_values() {
    let (_, table, _) = run(&["sech", "--order", "4"]);
    let (_, csv, _) = run(&["--format", "csv", "sech", "--order", "4"]);
    let (_, v) = json(&["sech", "--order", "4"]);
    let from_json: Vec<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["c_k"].as_str().unwrap().to_string())
        .collect();
    let from_csv: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let from_table: Vec<String> = table
        .lines()
        .skip(2)
        .take(5)
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(from_json, from_csv);
    assert_eq!(from_json, from_table);
}

#[test]
fn mc_charfn_at_zero() {
    let (code, v) = json(&["mc", "charfn", "--z", "0", "--paths", "200", "--steps", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"][0]["estimate"], 1.0);
    assert_eq!(v["rows"][0]["std_error"], 0.0);
}

#[test]
fn mc_charfn_target() {
    let (code, v) = json(&["mc", "charfn", "--z", "1", "--paths", "20000", "--steps", "100"]);
    assert_eq!(code, 0, "{v}");
    let target = v["rows"][0]["target"].as_f64().unwrap();
    assert!((target - 0.8868189).abs() < 1e-7);
}

#[test]
fn mc_moment_and_theorem5() {
    let (code, v) = json(&[
        "mc", "moment", "--n", "2", "--paths", "20000", "--steps", "100", "--seed", "3",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["rows"][0]["target"], 0.25);
    let (code, v) = json(&["mc", "theorem5", "--max-rank", "2", "--paths", "5000", "--steps", "50"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn mc_moment_is_deterministic() {
    let args = [
        "mc", "moment", "--n", "4", "--paths", "500", "--steps", "40", "--seed", "9",
    ];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn mc_multiplicativity_shrinks() {
    let (code, v) = json(&[
        "mc",
        "multiplicativity",
        "--alpha",
        "dX",
        "--beta",
        "dY",
        "--paths",
        "3000",
        "--steps",
        "1000",
    ]);
    assert_eq!(code, 0, "{v}");
    let m: Vec<f64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["estimate"].as_f64().unwrap())
        .collect();
    assert!(m[0] > m[1] && m[1] > m[2], "{m:?}");
    let (code, v) = json(&[
        "mc",
        "multiplicativity",
        "--alpha",
        "1",
        "--beta",
        "dX",
        "--paths",
        "100",
        "--steps",
        "40",
    ]);
    assert_eq!(code, 0);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["estimate"] == 0.0));
}

#[test]
fn mc_bad_config_is_usage_error() {
    assert_eq!(run(&["mc", "moment", "--a", "1", "--b", "0"]).0, 2);
    assert_eq!(
        run(&["mc", "theorem5", "--max-rank", "5", "--paths", "2", "--steps", "2"]).0,
        2
    );
}

#[test]
fn verify_fast_and_fault() {
    let (code, out, _) = run(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("ito.associativity"));
    let (code, v) = json(&["verify", "--inject-fault", "table"]);
    assert_eq!(code, 1);
    let assoc = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["invariant"] == "ito.associativity")
        .unwrap();
    assert_eq!(assoc["status"], "FAIL");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_levy");
    let ok = Command::new(bin).args(["euler", "--n-max", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));
    let usage = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let fail = Command::new(bin)
        .args(["euler", "--n-max", "5", "--check", "--inject-fault", "euler"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
}
