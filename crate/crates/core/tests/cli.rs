use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p4susy"))
        .args(args)
        .env_remove("P4SUSY_GRID_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn verify_one_step_singlet() {
    let out = run(&["verify", "--scenario", "iv", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "p4susy/1");
    assert_eq!(v["report"]["shift"], "5");
    assert_eq!(v["config"]["scenario"], "iv");
}

#[test]
fn verify_three_chains_scale() {
    let out = run(&["verify", "--scenario", "v"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["scale"], "1/3");
}

#[test]
fn verify_rejects_odd_n() {
    assert_eq!(
        run(&["verify", "--scenario", "iv", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--scenario", "ix"]).status.code(), Some(2));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["verify", "--scenario", "vi", "--n", "2"]);
    let b = run(&["verify", "--scenario", "vi", "--n", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn spectrum_with_numerics() {
    let out = run(&[
        "spectrum",
        "--ms",
        "2",
        "--ladder",
        "b",
        "--numeric",
        "--depth",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let first = &v["levels"][0];
    assert_eq!(first["nu"], -3);
    assert_eq!(first["energy"], "-5");
    assert!((first["numeric"].as_f64().unwrap() + 5.0).abs() < 1e-3);
    assert!(first["delta"].as_f64().unwrap() < 1e-3);
}

#[test]
fn spectrum_doublet() {
    let out = run(&["spectrum", "--ms", "2,3", "--ladder", "d"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["levels"][0]["role"], "doublet-low");
    assert_eq!(v["levels"][0]["energy"], "-7");
    assert_eq!(v["levels"][1]["role"], "doublet-high");
    assert_eq!(v["levels"][1]["energy"], "-5");
}

#[test]
fn spectrum_rejects_parity_violation() {
    assert_eq!(run(&["spectrum", "--ms", "2,4"]).status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "--ms", "2", "--ladder", "d"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn grid_size_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_p4susy"))
        .args(["spectrum", "--ms", "2", "--numeric", "--depth", "1"])
        .env("P4SUSY_GRID_N", "400")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["config"]["grid"]["n"], 400);
}

#[test]
fn residuals() {
    let out = run(&["residual", "--family", "hermite-II", "--m", "0", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        (v["alpha"].as_str(), v["beta"].as_str()),
        (Some("3"), Some("-8"))
    );
    let out = run(&["residual", "--family", "okamoto-II", "--m", "1", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["beta"], "-2/9");
    let out = run(&["residual", "--family", "okamoto-II", "--m", "3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_potential_rows() {
    let out = run(&[
        "export",
        "--potential",
        "--ms",
        "2",
        "--xmax",
        "5",
        "--points",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,value"));
    assert_eq!(lines.count(), 200);
}

#[test]
fn export_singlet_wavefunction() {
    let out = run(&[
        "export",
        "--wavefunction",
        "--ms",
        "2",
        "--nu",
        "-3",
        "--points",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mid: Vec<f64> = text
        .lines()
        .nth(2)
        .unwrap()
        .split(',')
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(mid, vec![0.0, 0.5]);
}

#[test]
fn export_rejects_singular_spec() {
    assert_eq!(
        run(&["export", "--potential", "--ms", "2,4"]).status.code(),
        Some(2)
    );
}

#[test]
fn unknown_flags_are_rejected() {
    assert_eq!(
        run(&["verify", "--scenario", "iv", "--bogus"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("p4susy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--scenario",
        "iv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    std::fs::remove_dir_all(dir).unwrap();
}
