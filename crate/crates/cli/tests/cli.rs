use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finespec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_identities_reports_summ() {
    let o = run(&["verify", "--suite", "identities", "--n", "5", "--k-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summ: PASS (exact)"));
}

#[test]
fn verify_oracle_minimal_grid() {
    let o = run(&["verify", "--suite", "oracle", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn injected_failure_exits_one() {
    let o = run(&["verify", "--suite", "all", "--n", "7", "--k-max", "8", "--l-max", "2", "--m-max", "2", "--inject-failure"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("summ: FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_machine_readable() {
    let args = ["verify", "--suite", "identities", "--n", "3", "--k-max", "10", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    let csv = stdout(&run(&["verify", "--suite", "clifford", "--n", "3", "--format", "csv"]));
    assert!(csv.starts_with("name,passed,kind,cases,residual,tol\n"));
}

#[test]
fn tables() {
    let h = stdout(&run(&["table", "hpoly", "--l", "2", "--k", "4"]));
    assert_eq!(h, "l,k,j,C\n2,4,0,2\n2,4,1,2\n");
    let j = stdout(&run(&["table", "jacobi", "--deg", "1", "--alpha", "-1/2", "--beta", "1/2"]));
    assert_eq!(j, "power,coeff\n0,-1/2\n1,1\n");
    let c = stdout(&run(&["table", "coeffs", "--side", "d", "--beta", "3", "--m", "0", "--n", "7"]));
    assert!(c.starts_with("side,beta,m,j,a_j,b_j\nD,3,0,0,"));
}

#[test]
fn kernel_eval_closed_and_series() {
    let closed: Value = serde_json::from_slice(&run(&["kernel", "eval", "--n", "3", "--s", "2", "--x", "e1"]).stdout).unwrap();
    assert_eq!(closed["method"], "closed");
    assert!(closed["tail_bound"].is_null());
    let o = run(&["kernel", "eval", "--n", "3", "--s", "2", "--x", "e1", "--method", "series", "--order", "40"]);
    let series: Value = serde_json::from_slice(&o.stdout).unwrap();
    let bound = series["tail_bound"].as_f64().unwrap();
    let parse = |v: &Value| {
        let s = v.as_str().unwrap();
        match s.split_once('/') {
            Some((p, q)) => p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap(),
            None => s.parse::<f64>().unwrap(),
        }
    };
    let err = parse(&closed["value"]["coeffs"][0]) - parse(&series["value"]["coeffs"][0]);
    assert!(err.abs() <= bound);
}

#[test]
fn calc_reproduces_sixteen_identity() {
    let o = run(&[
        "calc", "--fixture", &fixture("diag5.json"), "--contour", &fixture("circle_r2.json"), "--kind", "d", "--beta", "1", "--m", "1",
        "--fcoeffs", &fixture("cube.json"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["diagnostics"]["delta_n_2n"].as_f64().unwrap() < 1e-11);
    for (i, row) in v["value"]["entries"].as_array().unwrap().iter().enumerate() {
        for (j, e) in row.as_array().unwrap().iter().enumerate() {
            for (b, c) in e["coeffs"].as_array().unwrap().iter().enumerate() {
                let want = if i == j && b == 0 { 16.0 } else { 0.0 };
                assert!((c.as_f64().unwrap() - want).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn calc_refuses_small_contour() {
    let o = run(&["calc", "--fixture", &fixture("diag5.json"), "--contour", &fixture("circle_r05.json"), "--kind", "s", "--fcoeffs", &fixture("one.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("spectral safety"));
}

#[test]
fn spectrum_scan_csv() {
    let out = stdout(&run(&["spectrum", "--fixture", &fixture("diag5.json"), "--steps", "3"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("u,v,abs_det"));
    assert_eq!(lines.count(), 9);
}

#[test]
fn oracle_agrees_with_closed_form() {
    let o = run(&["oracle", "--n", "3", "--s", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matches_closed_form"], Value::Bool(true));
    assert!(v["kernel"]["num"].is_array() && v["kernel"]["den"].is_array());
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let path = std::env::temp_dir().join(format!("finespec-cli-{}.conf", std::process::id()));
    std::fs::write(&path, "# verify defaults\nsuite = identities\nn = 3\nk_max = 6\nformat = csv\n").unwrap();
    let p = path.display().to_string();
    let csv = stdout(&run(&["--config", &p, "verify"]));
    assert!(csv.starts_with("name,passed"));
    let human = stdout(&run(&["--config", &p, "verify", "--format", "human"]));
    assert!(human.contains("summ: PASS"));
    std::fs::write(&path, "no equals sign\n").unwrap();
    assert_eq!(run(&["--config", &p, "verify"]).status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn thread_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_finespec"))
        .args(["verify", "--suite", "clifford", "--n", "3"])
        .env("FINESPEC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
