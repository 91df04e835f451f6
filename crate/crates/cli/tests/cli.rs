use std::process::Command;

use zetalab_cli::{parse_complex, run, EXIT_NUMERIC, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zetalab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn basel_by_eta() {
    let (code, out, _) = call(&["zeta", "--s", "2", "--method", "eta"]);
    assert_eq!(code, 0);
    let value: f64 = out
        .lines()
        .next()
        .unwrap()
        .rsplit(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(
        (value - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-9,
        "{out}"
    );
}

#[test]
fn every_zeta_method_runs() {
    for method in ["eta", "continuation", "maslanka", "refinement"] {
        let (code, out, err) = call(&["zeta", "--s", "0.25+2i", "--method", method]);
        assert_eq!(code, 0, "{method}: {err}");
        assert!(out.contains("reference"), "{out}");
    }
}

#[test]
fn numeric_failures_exit_two() {
    let (code, _, err) = call(&["zeta", "--s", "-1+2i", "--method", "eta"]);
    assert_eq!(code, EXIT_NUMERIC);
    assert!(err.contains("Re s > 0"));
    assert_eq!(
        call(&["zeta", "--s", "1", "--method", "continuation"]).0,
        EXIT_NUMERIC
    );
    assert_eq!(
        call(&["zeros", "--from", "20", "--to", "10"]).0,
        EXIT_NUMERIC
    );
    assert_eq!(
        call(&["psf", "--function", "gaussian", "--x", "-1"]).0,
        EXIT_NUMERIC
    );
}

#[test]
fn usage_errors_exit_one_with_synopsis() {
    for args in [
        &["zeta", "--s", "0.5+xi", "--method", "eta"][..],
        &["zeta", "--s", "2", "--method", "nope"],
        &["frobnicate"],
        &["levy"],
        &["claims", "--id", "no-such-claim", "--json", "/tmp/x.json"],
        &["claims", "--json", "/tmp/x.json"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
    let (_, _, err) = call(&["zeta", "--s", "0.5+xi", "--method", "eta"]);
    assert!(err.contains("position 3"), "{err}");
    assert!(err.to_lowercase().contains("usage"), "{err}");
}

#[test]
fn help_names_the_identity() {
    let expected = [
        ("psf", "θ(c)"),
        ("zeta", "zeta"),
        ("levy", "E[L^u]"),
        ("wiener", "∫c(t)dr(c)"),
        ("claims", "identities"),
        ("zeros", "ζ*(1/2 + it)"),
    ];
    for (sub, needle) in expected {
        let (code, out, _) = call(&[sub, "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains(needle), "{sub}: {out}");
    }
    assert_eq!(call(&["--version"]).0, 0);
}

#[test]
fn psf_reports_small_residuals() {
    let (code, out, _) = call(&["psf", "--function", "gaussian", "--x", "0.3", "1", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let (code, _, _) = call(&["psf", "--function", "peakgauss", "--x", "0.5", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn levy_flags_divergence() {
    let (code, out, _) = call(&[
        "levy",
        "--u",
        "0.6",
        "--y0",
        "1",
        "--samples",
        "1000000",
        "--seed",
        "42",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("divergence_flag = true"), "{out}");
    let (_, out, _) = call(&["levy", "--u", "0.25", "--samples", "100000"]);
    assert!(out.contains("divergence_flag = false"), "{out}");
}

#[test]
fn wiener_writes_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.csv");
    let (code, out, _) = call(&[
        "wiener",
        "--t",
        "0.5",
        "--paths",
        "2000",
        "--seed",
        "3",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,value"));
    assert_eq!(lines.next(), Some("0.0,0.0"));
    assert_eq!(lines.count(), 1000);
}

#[test]
fn zeros_in_the_first_window() {
    let (code, out, _) = call(&["zeros", "--from", "0", "--to", "30", "--step", "0.1"]);
    assert_eq!(code, 0);
    let zeros: Vec<f64> = out.lines().skip(1).map(|l| l.parse().unwrap()).collect();
    assert_eq!(zeros.len(), 3);
    assert!((zeros[0] - 14.1347).abs() < 1e-3);
}

#[test]
fn claims_json_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let args = [
            "claims",
            "--id",
            "psf-gaussian",
            "--id",
            "wr-moments",
            "--seed",
            "5",
            "--json",
            p.to_str().unwrap(),
        ];
        assert_eq!(call(&args).0, 0);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["claims"][0]["claim"], "psf-gaussian");
    assert_eq!(v["claims"][0]["verdict"], "supported");
    assert_eq!(v["claims"][1]["config"]["seed"], 5);
}

#[test]
fn binary_entry_point() {
    let exe = env!("CARGO_BIN_EXE_zetalab");
    let ok = Command::new(exe)
        .args(["zeta", "--s", "0.5+14.1347i", "--method", "eta"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("zeta(0.5"));
    let bad = Command::new(exe).args(["zeta"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn complex_literals() {
    assert_eq!(
        parse_complex("0.5+14.1347i").unwrap(),
        zetalab::ComplexValue::new(0.5, 14.1347)
    );
    assert_eq!(
        parse_complex("2").unwrap(),
        zetalab::ComplexValue::new(2.0, 0.0)
    );
    assert_eq!(
        parse_complex("1.5-3i").unwrap(),
        zetalab::ComplexValue::new(1.5, -3.0)
    );
}
