use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::io::Write;

fn rrmf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrmf")).args(args).output().expect("binary runs")
}

fn rrmf_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rrmf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_cubic() {
    let v = json(&rrmf(&["classify", &fixture("cubic_f0.json")]));
    assert_eq!(v["in_F0"], true);
    assert_eq!(v["trivial"], false);
    assert_eq!(v["planar"], false);
    assert_eq!(v["primitive"], true);
    assert_eq!(v["regularity"], "not checked");
}

#[test]
fn classify_trivial_line() {
    let doc = r#"{"kind":"quaternion","coefficients":[["1","0","0","0"],["0","0","1","0"]]}"#;
    let v = json(&rrmf_stdin(&["classify", "-"], doc));
    assert_eq!((v["in_F0"].clone(), v["trivial"].clone(), v["planar"].clone()), (true.into(), true.into(), true.into()));
}

#[test]
fn classify_example2_with_certificate() {
    let v = json(&rrmf(&["classify", &fixture("example2.json")]));
    assert_eq!(v["in_F"], "proven");
    assert_eq!(v["f_basis"], "certificate");
    assert_eq!(v["planar"], false);
}

#[test]
fn classify_sqrt15_example() {
    let v = json(&rrmf(&["classify", &fixture("example3.json")]));
    assert_eq!(v["in_F"], "proven");
    // the cancellation is on the certificate side; A itself is primitive
    assert_eq!(v["core_degree"], 2);
    assert_eq!(v["primitive"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&rrmf_stdin(&["classify", "-"], "{not json")), 2);
    let mixed = r#"{"sqrt_base":2,"kind":"real","coefficients":[["sqrt(3)"]]}"#;
    assert_eq!(code(&rrmf_stdin(&["classify", "-"], mixed)), 2);
    let zero = r#"{"kind":"quaternion","coefficients":[]}"#;
    assert_eq!(code(&rrmf_stdin(&["classify", "-"], zero)), 3);
    let bad_u = r#"{"u":["0","1","0","0"],"coeffs":[["1","0"],["0","1"]]}"#;
    assert_eq!(code(&rrmf(&["construct", "trivial", "--spec", bad_u])), 3);
    assert_eq!(code(&rrmf(&["frames", &fixture("example2.json"), "--samples", "0"])), 3);
    assert_eq!(code(&rrmf(&["verify-han", &fixture("cubic_f0.json")])), 3);
    assert_eq!(code(&rrmf(&["classify", "/nonexistent/doc.json"])), 1);
}

#[test]
fn construct_family_and_cubic() {
    let v = json(&rrmf(&["construct", "family", "--n", "4"]));
    let want = json(&rrmf_stdin(&["classify", "-"], &v.to_string()));
    assert_eq!(want["in_F0"], true);
    let coeffs = &v["coefficients"];
    assert_eq!(coeffs[4], serde_json::json!(["0", "2", "0", "0"]));
    assert_eq!(coeffs[3], serde_json::json!(["0", "0", "0", "4"]));
    assert_eq!(coeffs[1], serde_json::json!(["0", "0", "1", "0"]));
    assert_eq!(v["metadata"]["self_check"]["in_F0"], true);
    assert_eq!(v["metadata"]["self_check"]["trivial"], false);

    let spec = r#"{"a1":["0","0","0","1"],"a2":["0","0","1","0"]}"#;
    let cubic = json(&rrmf(&["construct", "cubic", "--spec", spec]));
    let file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixture("cubic_f0.json")).unwrap()).unwrap();
    assert_eq!(cubic["coefficients"], file["coefficients"]);
}

#[test]
fn construct_f_element_carries_certificate() {
    let spec = r#"{"b0":[["1","0","0","0"],["0","0","1","0"],["0","0","0","3"],["0","1","0","0"]],"delta":[["-2","1"],["1","0"]]}"#;
    let v = json(&rrmf(&["construct", "f-element", "--spec", spec]));
    assert_eq!(v["metadata"]["self_check"]["certificate_verified"], true);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let verified = json(&rrmf(&["verify-han", path.to_str().unwrap()]));
    assert_eq!(verified["verified"], true);
    let reduced = json(&rrmf(&["reduce", path.to_str().unwrap()]));
    assert_eq!(reduced["metadata"]["in_F0"], true);
}

#[test]
fn rmf_csv_example2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rmf.csv");
    let run = rrmf(&["frames", &fixture("example2.json"), "--frame", "rmf", "--samples", "5", "--range", "0:1", "--out", out.to_str().unwrap()]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.join(","), "xi,px,py,pz,f1x,f1y,f1z,f2x,f2y,f2z,f3x,f3y,f3z");
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0], vec![0., 0., 0., 0., 1., 0., 0., 0., 1., 0., 0., 0., 1.]);
    // deterministic
    let again = rrmf(&["frames", &fixture("example2.json"), "--frame", "rmf", "--samples", "5", "--range", "0:1"]);
    assert_eq!(std::fs::read(&out).unwrap(), again.stdout);
}

#[test]
fn erf_on_family_has_no_twist() {
    let family = rrmf(&["construct", "family", "--n", "3"]);
    let csv = rrmf_stdin(&["frames", "-", "--frame", "erf", "--samples", "20001", "--range", "0:1"], std::str::from_utf8(&family.stdout).unwrap());
    assert!(csv.status.success());
    let mut reader = csv::Reader::from_reader(&csv.stdout[..]);
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    for w in rows.windows(3) {
        let h = w[2][0] - w[0][0];
        let df2: Vec<f64> = (7..10).map(|k| (w[2][k] - w[0][k]) / h).collect();
        // central differences: truncation error ~ h^2 = 1e-8
        assert!(dot(&w[1][10..13], &df2).abs() < 1e-6, "twist at {}", w[1][0]);
    }
}

#[test]
fn phase_rotates_normal_plane() {
    let base = rrmf(&["frames", &fixture("example2.json"), "--samples", "3"]);
    let turned = rrmf(&["frames", &fixture("example2.json"), "--samples", "3", "--phase", "3.141592653589793"]);
    let parse = |o: &Output| -> Vec<Vec<f64>> {
        csv::Reader::from_reader(&o.stdout[..])
            .records()
            .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
            .collect()
    };
    for (a, b) in parse(&base).iter().zip(parse(&turned).iter()) {
        for k in 7..13 {
            assert!((a[k] + b[k]).abs() < 1e-12);
        }
    }
}

#[test]
fn frenet_reports_flat_samples() {
    let line = r#"{"kind":"quaternion","coefficients":[["1","0","0","0"]]}"#;
    let out = rrmf_stdin(&["frames", "-", "--frame", "frenet", "--samples", "3"], line);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("curvature vanishes"));
}

#[test]
fn search_gamma_respects_seed() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_rrmf"))
            .args(["search-gamma", &fixture("example1.json"), "--max-degree", "2"])
            .env("RRMF_SEED", seed)
            .output()
            .unwrap();
        json(&out)
    };
    let v = run("7");
    assert_eq!(v["found"], true);
    assert_eq!(v["certificate"]["a"], serde_json::json!(["-2", "1"]));
    assert_eq!(v["seed"], 7);
    let bad = Command::new(env!("CARGO_BIN_EXE_rrmf"))
        .args(["search-gamma", &fixture("example1.json")])
        .env("RRMF_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 2);
}

#[test]
fn paper_examples_battery() {
    let a = rrmf(&["paper-examples"]);
    assert!(a.status.success());
    assert!(!String::from_utf8_lossy(&a.stdout).contains("FAIL"));
    let b = rrmf(&["paper-examples"]);
    assert_eq!(a.stdout, b.stdout);

    let p = rrmf(&["paper-examples", "--perturb-example1"]);
    assert_eq!(code(&p), 4);
    let text = String::from_utf8_lossy(&p.stdout);
    assert!(text.contains("PASS example1: Pythagorean identity"));
    assert!(text.contains("FAIL example1: certificate (a, b) verifies"));
}

#[test]
fn documents_round_trip_through_reduce() {
    let out = json(&rrmf(&["reduce", &fixture("example1.json")]));
    assert_eq!(out["metadata"]["in_F0"], true);
    let again = rrmf_stdin(&["classify", "-"], &out.to_string());
    assert_eq!(json(&again)["in_F0"], true);
}
