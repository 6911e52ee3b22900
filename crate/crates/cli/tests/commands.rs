use std::fs;
use std::process::Command;

use sombrero_cli::{RunSummary, Verdict};

fn sombrero(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sombrero"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, RunSummary, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, stdout, _) = sombrero(&all);
    let summary = RunSummary::from_json(&stdout).expect("single json document");
    (code, summary, stdout)
}

const WORKED: [&str; 10] = [
    "--g",
    "1.5",
    "--alpha",
    "3.4641016",
    "--beta",
    "2",
    "--A",
    "1.1547005",
    "--N",
    "3",
];

#[test]
fn derive_worked_example() {
    let mut args = vec!["derive"];
    args.extend(WORKED);
    let (code, s, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(s.verdict, Verdict::Success);
    let sol = &s.solutions[0];
    assert!((sol.trial.c - 0.866_025_4).abs() < 1e-7);
    assert!(sol.trial.m.abs() < 1e-6);
    assert!(sol.split.e0.abs() < 1e-6);

    let (code, human, _) = sombrero(&args);
    assert_eq!(code, 0);
    for key in ["a ", "c ", "m ", "h 1/(r^2+1)^2", "h 1/(r^2+1) ", "E0 "] {
        assert!(
            human.contains(&format!("  {key}")),
            "missing {key} in\n{human}"
        );
    }
}

#[test]
fn derive_free_sextic() {
    let (code, s, _) = json(&[
        "derive", "--g", "1", "--alpha", "0", "--beta", "0", "--A", "0", "--N", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(s.solutions[0].trial.m, 1.25);
    assert_eq!(s.solutions[0].split.e0, 2.5);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &[
            "derive", "--g", "-1", "--alpha", "0", "--beta", "0", "--A", "0", "--N", "3",
        ],
        &[
            "derive", "--g", "0", "--alpha", "0", "--beta", "0", "--A", "0", "--N", "3",
        ],
        &["from-lambda", "--g", "1.5", "--lambda", "abc", "--N", "3"],
        &[
            "scan-lambda",
            "--N",
            "3",
            "--from",
            "2",
            "--to",
            "1",
            "--steps",
            "10",
            "--out",
            "x.csv",
        ],
        &[
            "scan-lambda",
            "--N",
            "3",
            "--from",
            "0.5",
            "--to",
            "2",
            "--steps",
            "10",
            "--out",
            "x.csv",
        ],
        &["jackiw", "--N", "0"],
        &["eta-mu", "--g", "0", "--N", "3"],
        &[
            "verify", "--g", "1.5", "--lambda", "1.5", "--N", "3", "--grid", "8",
        ],
        &["verify", "--g", "1.5", "--alpha", "1", "--N", "3"],
        &[
            "plot-data",
            "--what",
            "potential",
            "--g",
            "1.5",
            "--lambda",
            "1.5",
            "--r-from",
            "2",
            "--r-to",
            "1",
            "--steps",
            "10",
            "--out",
            "x.csv",
        ],
        &[
            "plot-data",
            "--what",
            "potential",
            "--g",
            "1.5",
            "--lambda",
            "1.5",
            "--r-to",
            "1",
            "--steps",
            "10",
            "--out",
            "/nonexistent/dir/x.csv",
        ],
        &["bogus"],
    ];
    for args in cases {
        let (code, stdout, stderr) = sombrero(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(stdout.is_empty(), "{args:?} printed {stdout}");
        assert!(!stderr.is_empty());
    }
    let (_, _, stderr) = sombrero(cases[0]);
    assert!(stderr.contains("--g"), "{stderr}");
}

#[test]
fn from_lambda_outcomes() {
    let (code, s, _) = json(&["from-lambda", "--g", "1.5", "--lambda", "1.5", "--N", "3"]);
    assert_eq!(code, 0);
    let p = s.solutions[0].potential;
    assert!((p.beta - 2.0).abs() < 1e-12);
    assert!((p.alpha - 3.464_101_6).abs() < 1e-7);
    assert!((p.big_a - 1.154_700_5).abs() < 1e-7);

    let (code, stdout, _) = sombrero(&["from-lambda", "--g", "1.5", "--lambda", "1.0", "--N", "3"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("no η in (0,1)"));
}

#[test]
fn eta_mu_reports_c_and_verdict() {
    let (code, s, _) = json(&["eta-mu", "--g", "1", "--N", "3"]);
    assert_eq!(code, 0);
    assert_eq!(s.verdict, Verdict::Pass);
    let sol = &s.solutions[0];
    assert!((sol.trial.c - 0.131_033_2).abs() < 1e-6);
    assert!(s
        .notes
        .iter()
        .any(|n| n.contains("c = (1 - eta) g r0^2 / 2")));

    let (code, s, _) = json(&["eta-mu", "--g", "0.7", "--N", "3"]);
    assert_eq!(code, 1);
    assert_eq!(s.verdict, Verdict::NoRoot);
}

#[test]
fn jackiw_small_dimension() {
    let (code, s, _) = json(&["jackiw", "--N", "1"]);
    assert_eq!(code, 0);
    let first = &s.solutions[0];
    assert!((first.potential.alpha - 2.0).abs() < 1e-12);
    assert!((first.split.e0 - 1.0).abs() < 1e-12);
}

#[test]
fn verify_negative_control_names_failed_checks() {
    let mut args = vec!["verify"];
    args.extend(WORKED);
    args[6] = "2.1";
    let (code, stdout, stderr) = sombrero(&args);
    assert_eq!(code, 1);
    assert!(stderr.contains("check eigenvalue failed"), "{stderr}");
    assert!(stderr.contains("check m_zero failed"), "{stderr}");
    assert!(stdout.contains("m = 0.0375"), "{stdout}");
}

#[test]
fn verify_with_correction_passes_any_potential() {
    let (code, s, _) = json(&[
        "verify",
        "--g",
        "1",
        "--alpha",
        "0.5",
        "--beta",
        "-1",
        "--A",
        "2",
        "--N",
        "2",
        "--with-correction",
    ]);
    assert_eq!(code, 0);
    assert_eq!(s.verdict, Verdict::Pass);
}

#[test]
fn json_summary_round_trips_byte_identically() {
    for args in [
        vec![
            "derive", "--g", "1", "--alpha", "0", "--beta", "0", "--A", "0",
        ],
        vec!["eta-mu", "--g", "1", "--N", "3"],
        vec!["jackiw", "--N", "5"],
    ] {
        let (_, summary, text) = json(&args);
        assert_eq!(summary.to_json() + "\n", text);
        assert_eq!(summary.tool, "sombrero");
        assert_eq!(summary.version, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn human_numbers_are_in_json() {
    let (_, human, _) = sombrero(&["eta-mu", "--g", "1", "--N", "3"]);
    let (_, s, _) = json(&["eta-mu", "--g", "1", "--N", "3"]);
    let sol = &s.solutions[0];
    let line = human
        .lines()
        .find(|l| l.trim_start().starts_with("c "))
        .unwrap();
    let shown: f64 = line.split_whitespace().last().unwrap().parse().unwrap();
    assert_eq!(sombrero_cli::sig9(sol.trial.c), sombrero_cli::sig9(shown));
}

#[test]
fn datasets_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let (code, _, _) = sombrero(&[
            "plot-data",
            "--what",
            "wavefunction",
            "--g",
            "1.5",
            "--lambda",
            "1.5",
            "--N",
            "3",
            "--r-to",
            "3",
            "--steps",
            "50",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes, fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert!(!text.contains('\r'));
    assert!(text.starts_with("r,psi\n"));
    assert_eq!(text.lines().count(), 51);
}

#[test]
fn scan_dataset_layout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let (code, s, _) = json(&[
        "scan-lambda",
        "--N",
        "3",
        "--from",
        "1.01",
        "--to",
        "2",
        "--steps",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let d = s.dataset.unwrap();
    assert_eq!((d.rows, d.missing), (5, 0));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("lambda,eta"));
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 2));
}
