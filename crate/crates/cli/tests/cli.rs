use std::process::Command;

fn brlab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_brlab")).args(args).output().expect("runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf8"))
}

fn report(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out) = brlab(args);
    (code, serde_json::from_str(&out).expect("json report"))
}

#[test]
fn tropical_rank2_level2_counts() {
    let (code, rep) = report(&["verify", "tropical", "--rank", "2", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rep["pass"], true);
    let counts = rep["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "tropical.sign_counts")
        .unwrap()["counts"]
        .clone();
    assert_eq!((counts["positive"].as_i64(), counts["negative"].as_i64()), (Some(20), Some(20)));
}

#[test]
fn dilog_constant_value() {
    let (code, rep) = report(&["verify", "dilog", "--rank", "2", "--level", "2", "--tol", "1e-8", "--mode", "constant"]);
    assert_eq!(code, 0);
    let rec = &rep["records"][1];
    assert!((rec["lhs"].as_f64().unwrap() - 2.0).abs() < 1e-8);
    assert_eq!(rec["rhs"].as_f64(), Some(2.0));
}

#[test]
fn failing_check_exits_one() {
    let (code, rep) = report(&["verify", "dilog", "--rank", "2", "--level", "2", "--tol", "1e-30", "--mode", "constant"]);
    assert_eq!(code, 1);
    assert_eq!(rep["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nothing"][..],
        &["verify", "ysystem", "--mode", "bogus"],
        &["verify", "tropical", "--rank", "1", "--level", "2"],
        &["verify", "tropical", "--tol", "-1"],
        &["verify", "tsystem", "--dump-trace", "x.csv"],
        &["verify", "pairs", "--pair", "B2:A1"],
        &["dump", "trace", "--rank", "2", "--level", "2", "--from", "0.3"],
    ] {
        assert_eq!(brlab(args).0, 2, "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "ysystem", "--rank", "2", "--level", "2", "--seed", "7", "--samples", "2"];
    let (a, b) = (brlab(&args), brlab(&args));
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn orbit_dump_matches_golden() {
    let (code, out) = brlab(&["dump", "orbits", "--rank", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("../../core/tests/data/orbits_r6.txt"));
}

#[test]
fn trace_dump_matches_golden_trace() {
    let (code, out) = brlab(&["dump", "trace", "--rank", "2", "--level", "2", "--from", "-3", "--to", "2"]);
    assert_eq!(code, 0);
    let golden = include_str!("../../core/tests/data/trace_b2_level2.csv");
    // golden rows: i,ip,u2,frame,<exponents>; dump rows add the sign column
    let dumped: Vec<String> = out
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            [&f[..4], &f[5..]].concat().join(",")
        })
        .collect();
    for row in golden.lines().skip(1) {
        assert!(dumped.iter().any(|d| d == row), "missing {row}");
    }
}

#[test]
fn config_file_sets_grid() {
    let dir = std::env::temp_dir().join(format!("brlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    std::fs::write(&path, "grid = [[3, 2]]\nseed = 3\nsamples = 1\n").unwrap();
    let (code, rep) = report(&["verify", "ysystem", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let recs = rep["records"].as_array().unwrap();
    assert_eq!(recs.len(), 3);
    assert!(recs.iter().all(|r| r["params"]["r"] == 3 && r["params"]["seed"] == 3));
    std::fs::write(&path, "colour = 1\n").unwrap();
    assert_eq!(brlab(&["verify", "ysystem", "--config", path.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dump_trace_writes_csv() {
    let path = std::env::temp_dir().join(format!("brlab-trace-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _) = brlab(&["verify", "tropical", "--rank", "2", "--level", "3", "--dump-trace", p]);
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("i,ip,u2,parity,sign"));
    std::fs::remove_file(&path).unwrap();
}
