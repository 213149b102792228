use std::path::Path;
use std::process::{Command, Output};

use geronimus_core::geronimus::{eval_q, zeros_q};
use geronimus_core::second_kind::{eval_second_kind, ratio_r_cf};
use geronimus_core::{Complex64, GeronimusParams};
use serde_json::Value;

fn lgq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgq")).args(args).output().expect("spawn lgq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["eval", "--c", "1", "--z", "-1"][..],
        &["eval", "--alpha", "-1", "--z", "-1"],
        &["lambda", "--N", "-0.5"],
        &["eval", "--family", "F", "--z", "0"],
        &["check", "--suite", "asymptotics", "--nmax", "200"],
    ] {
        let o = lgq(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("lgq: "));
    }
}

#[test]
fn second_kind_first_value() {
    let o = lgq(&["eval", "--family", "F", "--n", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,c,value_sign,value_logmag,value"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let v: f64 = row[4].parse().unwrap();
    assert!((v - 0.596347362323194).abs() < 1e-13, "{v}");
}

#[test]
fn csv_and_json_reproduce_the_library_bits() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("q.csv");
    let json_path = dir.path().join("q.json");
    let common = ["eval", "--alpha", "0.5", "--c", "-2", "--N", "0.3", "--n", "0,3,17", "--z", "-1.5+0.25i,2"];
    assert!(lgq(&[&common[..], &["--out", csv_path.to_str().unwrap()]].concat()).status.success());
    let o = lgq(&[&common[..], &["--format", "json", "--out", json_path.to_str().unwrap()]].concat());
    assert!(o.status.success());

    let p = GeronimusParams::new(0.5, -2.0, 0.3).unwrap();
    let mut expected = Vec::new();
    for n in [0usize, 3, 17] {
        for z in [Complex64::new(-1.5, 0.25), Complex64::new(2.0, 0.0)] {
            let v = eval_q(n, p, z).unwrap();
            expected.push((n, z, v.re().to_f64(), v.im().to_f64()));
        }
    }

    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&csv_path).unwrap();
    let head = rdr.headers().unwrap().clone();
    let col = |name: &str| head.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), expected.len());
    let doc = json_file(&json_path);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["config"]["N"], 0.3);
    let jrows = doc["rows"].as_array().unwrap();
    for ((r, j), &(n, z, re, im)) in rows.iter().zip(jrows).zip(&expected) {
        assert_eq!(r[col("n")].parse::<usize>().unwrap(), n);
        assert_eq!(r[col("z_re")].parse::<f64>().unwrap(), z.re);
        assert_eq!(r[col("value_re")].parse::<f64>().unwrap().to_bits(), re.to_bits());
        assert_eq!(r[col("value_im")].parse::<f64>().unwrap().to_bits(), im.to_bits());
        assert_eq!(j["value_re"].as_f64().unwrap().to_bits(), re.to_bits());
        assert_eq!(j["value_im"].as_f64().unwrap().to_bits(), im.to_bits());
    }
}

#[test]
fn huge_values_keep_their_logmag() {
    let o = lgq(&["eval", "--family", "F", "--c", "-0.25", "--n", "400"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let expect = eval_second_kind(400, 0.0, -0.25).unwrap();
    let logmag: f64 = row[3].parse().unwrap();
    assert_eq!(logmag.to_bits(), expect.logmag().to_bits());
    assert!(logmag > 700.0);
    assert_eq!(row[4], "");
}

#[test]
fn repeated_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("run{k}.json"));
        let o = lgq(&["check", "--suite", "hypergeom", "--seed", "7", "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let a = lgq(&["lambda", "--n", "5,1,5,3"]);
    let b = lgq(&["lambda", "--n", "1,3,5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gram_suite_passes() {
    let o = lgq(&["check", "--suite", "gram"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["summary"]["passed"], true);
    assert!(doc["rows"].as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn stability_suite_reports_failure_with_exit_1() {
    // the forward recurrence stays below 1 until n = 91 here, past the stated bound of 80
    let o = lgq(&["check", "--suite", "stability"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["summary"]["passed"], false);
}

#[test]
fn zeros_are_increasing_and_interlace() {
    let o = lgq(&["zeros", "--alpha", "0.5", "--c", "-1", "--N", "2", "--n", "6", "--format", "json"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let xs: Vec<f64> = rows.iter().map(|r| r["zero"].as_f64().unwrap()).collect();
    assert!(xs.windows(2).all(|w| w[0] < w[1]));
    assert!(rows.iter().all(|r| r["interlaces"] == true));
    let lib = zeros_q(6, GeronimusParams::new(0.5, -1.0, 2.0).unwrap()).unwrap();
    assert_eq!(xs, lib);
}

#[test]
fn lambda_without_mass_follows_the_ratio() {
    let o = lgq(&["lambda", "--alpha", "0.5", "--c", "-2", "--N", "0", "--nmin", "1", "--nmax", "30", "--format", "json"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["summary"]["branch"], "N=0");
    assert!(doc["summary"]["crossover_n_star"].is_null());
    for r in doc["rows"].as_array().unwrap() {
        let n = r["n"].as_u64().unwrap() as usize;
        let lam = r["lambda_exact"].as_f64().unwrap();
        let r_prev = ratio_r_cf(n - 1, 0.5, Complex64::new(-2.0, 0.0), 1e-15).unwrap().re;
        assert!(lam > 0.0);
        assert!((lam + r_prev).abs() <= 1e-9 * lam, "n={n}: {lam} vs {}", -r_prev);
    }
}
