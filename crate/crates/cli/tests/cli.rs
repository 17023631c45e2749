use qbias_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qbias").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn scan_reports_threshold() {
    let (code, out, _) = call(&["scan-conjecture", "--a", "2", "--b", "3", "--m", "5", "--N", "500"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["threshold"], 45);
}

#[test]
fn horizon_guard() {
    let args = ["scan-conjecture", "--a", "1", "--b", "2", "--m", "3", "--N", "200"];
    assert_eq!(call(&args).0, 3);
    let mut off = args.to_vec();
    off.extend(["--horizon-guard", "false"]);
    assert_eq!(call(&off).0, 0);
}

#[test]
fn oracle_zero() {
    let (code, out, _) = call(&["oracle", "--a", "1", "--b", "2", "--m", "2", "--x", "1", "--y", "0", "--n", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["value"], "0");
}

#[test]
fn invalid_config_is_json_on_stderr() {
    for args in [
        vec!["compute-bias", "--a", "1", "--b", "2", "--m", "2", "--x", "0.5", "--y", "0", "--N", "5"],
        vec!["compute-bias", "--a", "2", "--b", "2", "--m", "2", "--x", "1", "--y", "0", "--N", "5"],
        vec!["asymptotics", "convergence", "--a", "2", "--m", "4", "--flavor", "01"],
        vec!["oracle", "--a", "1", "--b", "2", "--m", "3", "--x", "1", "--y", "1", "--n", "99"],
        vec!["verify", "thm9"],
    ] {
        let (code, out, err) = call(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert!(v["error"].is_string() && v["message"].is_string());
    }
}

#[test]
fn tail_bound_is_inconclusive() {
    let (code, _, err) = call(&["asymptotics", "boundary", "--a", "1", "--m", "3", "--flavor", "11", "--z", "0.3", "--N", "50"]);
    assert_eq!(code, 3);
    assert!(err.contains("tail_bound"));
}

#[test]
fn failed_trend_is_a_violation() {
    let (code, _, _) = call(&["asymptotics", "convergence", "--a", "1", "--m", "3", "--flavor", "01", "--samples", "500,1000", "--N", "1000"]);
    assert_eq!(code, 1);
}

#[test]
fn csv_header_and_rationals() {
    let (code, out, _) = call(&[
        "compute-bias", "--a", "1", "--b", "2", "--m", "2", "--x", "3/2", "--y", "1/2", "--N", "3", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,p_ab,p_ba,diff_sign");
    assert_eq!(lines[4], "3,13/2,0,1");
}

#[test]
fn floats_have_seventeen_digits() {
    let (_, out, _) = call(&["asymptotics", "constants", "--m-max", "3"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let s = v["report"][1]["value"].as_str().unwrap();
    let (mantissa, exp) = s.split_once('e').unwrap();
    assert_eq!(exp, "-1");
    assert_eq!(mantissa.replace('.', "").len(), 17);
    assert!((s.parse::<f64>().unwrap() - 0.691_076_034_711_422_05).abs() < 1e-15);
}

#[test]
fn output_file_and_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    let base = ["verify", "identities", "--output"];
    let mut a = base.to_vec();
    a.push(p1.to_str().unwrap());
    a.extend(["--threads", "1"]);
    let mut b = base.to_vec();
    b.push(p2.to_str().unwrap());
    assert_eq!(call(&a).0, 0);
    assert_eq!(call(&b).0, 0);
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}
