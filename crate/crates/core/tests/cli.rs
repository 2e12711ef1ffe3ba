use std::process::{Command, Output};

use gamma_certify::harness::{from_csv, from_json};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gamma-certify"));
    c.env_remove("GAMMA_CERTIFY_DIGITS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn falsify_suite_meets_expectations() {
    let o = run(&["verify", "--suite", "falsify-printed"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let reports = from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(reports.len(), 4);
    let ids: Vec<_> = reports.iter().map(|r| r.claim_id.as_str()).collect();
    assert_eq!(
        ids,
        [
            "eq3.8-as-printed",
            "eq3.12-as-printed",
            "eq3.13-as-printed",
            "t5-coefficient-as-printed"
        ]
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["verify", "--suite", "nope"])), 2);
    assert_eq!(
        code(&run(&["verify", "--suite", "thm3.4", "--digits", "10"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "--suite",
            "thm3.4",
            "--grid",
            "1:0:5:log"
        ])),
        2
    );
    assert_eq!(
        code(&run(&["verify", "--suite", "thm3.4", "--format", "xml"])),
        2
    );
    assert_eq!(code(&run(&["eval", "--family", "nope", "--x", "1"])), 2);
    assert_eq!(code(&run(&["eval", "--family", "qi-low", "--x", "-1"])), 2);
    assert_eq!(code(&run(&["lambda-star", "--tol", "0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let env = bin()
        .env("GAMMA_CERTIFY_DIGITS", "abc")
        .args(["verify", "--suite", "thm3.4"])
        .output()
        .unwrap();
    assert_eq!(code(&env), 2);
}

#[test]
fn unwritable_output_exits_two() {
    let o = run(&[
        "verify",
        "--suite",
        "thm3.4",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("I/O"));
}

#[test]
fn unexpected_verdict_exits_one() {
    // Near x = 1e15 the strict gamma gaps are far below binary64 resolution,
    // so the containment claims come out indeterminate instead of verified.
    let o = run(&["verify", "--suite", "thm3.1", "--grid", "1e15:1e16:5:log"]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("thm3.1-ineq1 is indeterminate"), "{err}");
    assert!(!err.contains("best-constants"), "{err}");
}

#[test]
fn reports_are_byte_identical_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for (i, fmt) in ["json", "json", "csv", "csv"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.{fmt}"));
        let o = run(&[
            "verify",
            "--suite",
            "thm3.4",
            "--format",
            fmt,
            "--out",
            path.to_str().unwrap(),
            "--no-timing",
        ]);
        assert_eq!(code(&o), 0);
        texts.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    assert_eq!(texts[2], texts[3]);
    assert_eq!(from_json(&texts[0]).unwrap(), from_csv(&texts[2]).unwrap());
}

#[test]
fn lambda_star_is_deterministic() {
    let a = run(&["lambda-star", "--tol", "1e-6"]);
    let b = run(&["lambda-star", "--tol", "1e-6"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let json: serde_json::Value = serde_json::from_str(text.lines().nth(1).unwrap()).unwrap();
    let lo = json["bracket"][0].as_f64().unwrap();
    let hi = json["bracket"][1].as_f64().unwrap();
    let v = json["lambda_star"].as_f64().unwrap();
    assert!(hi - lo <= 1e-6 && lo <= v && v <= hi && 0.5 < v && v < 1.5);
}

#[test]
fn compare_and_eval_print() {
    let o = run(&["compare", "--x", "2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let row = text
        .lines()
        .find(|l| l.starts_with("bukac") && l.contains("sevli-batir"))
        .unwrap();
    let cols: Vec<_> = row.split_whitespace().collect();
    assert_eq!(cols[2..], ["sevli-batir", "bukac"]);

    let o = run(&["eval", "--family", "factorial-high", "--x", "1"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("lower_margin 0.0000000000000000e0"), "{text}");
}

#[test]
fn digits_env_is_reported() {
    let o = bin()
        .env("GAMMA_CERTIFY_DIGITS", "30")
        .args(["verify", "--suite", "thm3.4"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    for r in from_json(&String::from_utf8(o.stdout).unwrap()).unwrap() {
        assert_eq!(r.precision_digits, 30);
    }
}
