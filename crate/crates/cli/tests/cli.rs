use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use georeg_cli::{run, EXIT_DATA, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn georeg(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["georeg"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixtures_dir() -> (tempfile::TempDir, PathBuf, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = georeg(&["examples", "--output", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2);
    let ex1 = dir.path().join("example1_amarante.csv");
    let ex2 = dir.path().join("example2_infections.csv");
    (dir, ex1, ex2)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn text_report_example1() {
    let (_dir, ex1, _) = fixtures_dir();
    let (code, out, err) = georeg(&["fit", "--input", path(&ex1)]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("a = -9.7069"), "{out}");
    assert!(out.contains("b = 226.4557"), "{out}");
    assert!(out.contains("theta_deg: 160.68"), "{out}");
    assert!(out.contains("y = -9.7069·x + 226.4557"), "{out}");
    assert!(out.contains("class: StrongNegative"), "{out}");
}

#[test]
fn json_report_is_consistent() {
    let (_dir, ex1, ex2) = fixtures_dir();
    for p in [&ex1, &ex2] {
        let (code, out, _) = georeg(&["fit", "--input", path(p), "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        let r = v["r"].as_f64().unwrap();
        let theta = v["theta_deg"].as_f64().unwrap();
        assert!((r - theta.to_radians().cos()).abs() <= 1e-12);
        let (cx, cy) = (v["centroid"]["x"].as_f64().unwrap(), v["centroid"]["y"].as_f64().unwrap());
        let predicted = v["slope"].as_f64().unwrap() * cx + v["intercept"].as_f64().unwrap();
        assert!((predicted - cy).abs() <= 1e-6 * cy.abs());
        assert!(!out.contains("null"));
    }
}

#[test]
fn json_key_order_is_fixed() {
    let (_dir, ex1, _) = fixtures_dir();
    let (_, out, _) = georeg(&["fit", "--input", path(&ex1), "--format", "json"]);
    let keys = [
        "\"n\"",
        "\"centroid\"",
        "\"slope\"",
        "\"intercept\"",
        "\"theta_deg\"",
        "\"r\"",
        "\"class\"",
        "\"sse\"",
        "\"u_dot_i\"",
        "\"i_norm_sq\"",
        "\"i_norm\"",
        "\"u_norm\"",
        "\"residual_dot_i\"",
        "\"ones_orthogonality\"",
        "\"equation\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{out}");
}

#[test]
fn column_selection_by_name() {
    let (_dir, ex1, _) = fixtures_dir();
    let (code, out, _) = georeg(&[
        "fit",
        "--input",
        path(&ex1),
        "--x-col",
        "pluviosidade",
        "--y-col",
        "temperatura",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    // Swapping the axes keeps r and flips nothing else about its sign.
    assert!(v["r"].as_f64().unwrap() < -0.94);
    assert_eq!(v["n"], 12);
}

#[test]
fn delimiter_flag() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("semi.csv");
    fs::write(&p, "x;y\n0;1\n1;3\n2;5\n3;7.5\n").unwrap();
    let (code, out, _) = georeg(&["fit", "--input", path(&p), "--delimiter", ";"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("n: 4"));
}

#[test]
fn data_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let constant_x = dir.path().join("constant_x.csv");
    fs::write(&constant_x, "x,y\n2,1\n2,5\n2,9\n").unwrap();
    let (code, _, err) = georeg(&["fit", "--input", path(&constant_x)]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("degenerate x"), "{err}");

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "x,y\n1,abc\n").unwrap();
    let (code, _, err) = georeg(&["fit", "--input", path(&bad)]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("line 2, column 2"), "{err}");

    let (code, _, _) = georeg(&["fit", "--input", path(&dir.path().join("missing.csv"))]);
    assert_eq!(code, EXIT_DATA);

    let flat = dir.path().join("flat.csv");
    fs::write(&flat, "x,y\n1,4\n2,4\n3,4\n").unwrap();
    let (code, _, err) = georeg(&["fit", "--input", path(&flat)]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("degenerate y"), "{err}");

    let single = dir.path().join("single.csv");
    fs::write(&single, "x,y\n1,4\n").unwrap();
    assert_eq!(georeg(&["fit", "--input", path(&single)]).0, EXIT_DATA);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(georeg(&[]).0, EXIT_USAGE);
    assert_eq!(georeg(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(georeg(&["fit"]).0, EXIT_USAGE);
    assert_eq!(georeg(&["fit", "--input", "x.csv", "--format", "xml"]).0, EXIT_USAGE);

    let (_dir, ex1, _) = fixtures_dir();
    let (code, _, err) = georeg(&["plot", "--input", path(&ex1), "--width", "50"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
    let (code, _, _) = georeg(&["fit", "--input", path(&ex1), "--x-col", "0", "--y-col", "0"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn verify_passes_on_fixtures() {
    let (_dir, ex1, ex2) = fixtures_dir();
    for p in [&ex1, &ex2] {
        let (code, out, err) = georeg(&["verify", "--input", path(p)]);
        assert_eq!(code, EXIT_OK, "{out}{err}");
        assert!(out.contains("verify: ok"));
        let (code, _, _) = georeg(&["fit", "--input", path(p), "--verify"]);
        assert_eq!(code, EXIT_OK);
    }
}

#[test]
fn plot_to_file_and_stdout() {
    let (dir, ex1, _) = fixtures_dir();
    let target = dir.path().join("plot.svg");
    let (code, out, _) = georeg(&["plot", "--input", path(&ex1), "--output", path(&target)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let file = fs::read_to_string(&target).unwrap();
    let (_, stdout_svg, _) = georeg(&["plot", "--input", path(&ex1)]);
    assert_eq!(file, stdout_svg);
    assert_eq!(file.matches("<circle").count(), 12);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_georeg");
    let dir = tempfile::tempdir().unwrap();
    let constant_x = dir.path().join("constant_x.csv");
    fs::write(&constant_x, "x,y\n1,1\n1,2\n").unwrap();
    let status = Command::new(exe).args(["fit", "--input"]).arg(&constant_x).status().unwrap();
    assert_eq!(status.code(), Some(EXIT_DATA));
    let status = Command::new(exe).arg("bogus").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
    let output = Command::new(exe)
        .args(["examples", "--output"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(output.status.success());
    let output = Command::new(exe)
        .args(["fit", "--input"])
        .arg(dir.path().join("example2_infections.csv"))
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("a = 227.8087"));
}
