use std::process::{Command, Output};

fn invq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(invq(&["verify", "thm31", "--range", "2..8"]).status.code(), Some(0));
    assert_eq!(invq(&["verify", "recurrence", "--range", "0..50"]).status.code(), Some(0));
    assert_eq!(invq(&["verify", "thm31", "--range", "5..2"]).status.code(), Some(2));
    assert_eq!(invq(&["verify", "kronecker", "--range", "1..7"]).status.code(), Some(2));
    assert_eq!(invq(&["verify", "corollary", "--range", "0..2"]).status.code(), Some(2));
    assert_eq!(invq(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_all_small_range() {
    let o = invq(&["verify", "all", "--range", "0..3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,identity,equal"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    for id in [
        "thm31-parity0",
        "corollary-full",
        "inverse-1",
        "cauchy-0",
        "recurrence",
        "boundary-full",
        "legendre-1",
        "kronecker",
    ] {
        assert!(rows.iter().any(|r| r.contains(id)), "missing {id}");
    }
    // n = 0 has no odd block, corollary or Kronecker row
    assert!(!rows
        .iter()
        .any(|r| r.starts_with("0,thm31-parity1") || r.starts_with("0,corollary") || r.starts_with("0,kronecker")));
}

#[test]
fn json_records_are_exact() {
    let o = invq(&["verify", "cauchy", "--range", "2..2"]);
    let first: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["n"], 2);
    assert_eq!(first["identity"], "cauchy-0");
    assert_eq!(first["equal"], true);
    assert!(first["lhs"].as_array().unwrap()[0].as_str().unwrap().contains('/'));
}

#[test]
fn bounds_rows() {
    let o = invq(&["bounds", "--range", "2..10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,lambda_lo,lambda_hi,f1,M,ok");
    assert_eq!(lines.len(), 10);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));

    let o = invq(&["bounds", "--range", "2..2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["f1"], "3");
    assert_eq!(v["m_lower"]["value"], "3.000000000000000");
    assert_eq!(v["lambda_n"]["hi"], "3");
    assert_eq!(invq(&["bounds", "--range", "1..3"]).status.code(), Some(2));
    assert_eq!(invq(&["bounds", "--range", "2..3", "--bits", "32"]).status.code(), Some(2));
    assert_eq!(invq(&["bounds", "--range", "2..3", "--tol", "0"]).status.code(), Some(2));
}

#[test]
fn figure_rows() {
    let o = invq(&["figure", "--range", "2..4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        ["n,root,parity", "2,3.000000000000,0", "3,15.000000000000,1", "4,2.468774375990,0", "4,42.531225624010,0"]
    );
}

#[test]
fn figure_full_range_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roots.csv");
    let o = invq(&["figure", "--range", "2..50", "--format", "csv", "--jobs", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 625);
    for r in rows {
        let f: Vec<&str> = r.split(',').collect();
        let n: u64 = f[0].parse().unwrap();
        let root: f64 = f[1].parse().unwrap();
        assert!(root > 2.0 && root < 1.0e6);
        assert_eq!(f[2], (n % 2).to_string());
    }
}

#[test]
fn parallel_output_is_identical() {
    let cases: [&[&str]; 3] =
        [&["bounds", "--range", "2..30"], &["verify", "all", "--range", "0..4"], &["boundary", "--range", "1..20"]];
    for args in cases {
        let serial = invq(&[args, &["--jobs", "1"]].concat());
        let parallel = invq(&[args, &["--jobs", "6"]].concat());
        assert_eq!(serial.status.code(), Some(0));
        assert_eq!(serial.stdout, parallel.stdout, "{args:?}");
    }
}

#[test]
fn boundary_mu_values() {
    let o = invq(&["boundary", "--range", "1..10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mus: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(mus, ["3", "5", "10", "14", "21", "27", "36", "44", "55", "65"]);
    let o = invq(&["boundary", "--range", "2..2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["mu"], "5");
    assert_eq!(invq(&["boundary", "--range", "0..3"]).status.code(), Some(2));
}

#[test]
fn asymptotics_rows() {
    let o = invq(&["asymptotics", "2", "50", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    // midpoint of the lambda_2 enclosure over f1(2) = 3
    let at_two: f64 = rows[0][2].parse().unwrap();
    assert!((at_two - 1.0).abs() < 1e-12);
    let ratio: f64 = rows[1][2].parse().unwrap();
    assert!(ratio > 0.789 && ratio < 0.812);
    assert_eq!(invq(&["asymptotics", "1"]).status.code(), Some(2));
}

#[test]
fn text_format() {
    let o = invq(&["verify", "legendre", "--range", "1..1", "--format", "text"]);
    assert_eq!(stdout(&o), "n=1   legendre-0     equal\nn=1   legendre-1     equal\n");
}
