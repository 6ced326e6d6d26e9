//! End-to-end tests of the `coreinv` binary: exit codes, output shape,
//! round-trippable matrix output, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coreinv"))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_core_inverse_round_trips() {
    let out = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("a_rank1.mat"),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("field Q\n2\n-1/2 -1/2\n-1/2 -1/2\n"), "{text}");
    assert!(text.contains("x a^2 = a: pass"));
    // the printed matrix feeds back in as a valid candidate
    assert!(text.contains("witness a^#:"));
}

#[test]
fn compute_nonexistent_exits_one() {
    let out = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("nilpotent.mat"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NonExistent"), "{}", stderr(&out));
}

#[test]
fn compute_formula_premise_violation_exits_one() {
    // C7 demands a {1,3}-inverse; this witness is only inner
    let out = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("a_rank1.mat"),
        "--formula",
        "C7",
        "--inner",
        &fixture("a_rank1_inner2.mat"),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(stderr(&out).contains("PremiseViolation"), "{}", stderr(&out));
}

#[test]
fn compute_formula_singular_unit_exits_one() {
    // the fixture witness makes the C7 unit singular
    let out = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("a_rank1.mat"),
        "--formula",
        "C7",
        "--inner",
        &fixture("a_rank1_inner.mat"),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(stderr(&out).contains("NonExistent"), "{}", stderr(&out));
}

#[test]
fn compute_formula_with_valid_class_matches_solver() {
    let direct = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("a_rank1.mat"),
    ]);
    let via_formula = run(&[
        "compute",
        "--field",
        "Q",
        "--kind",
        "core",
        "--input",
        &fixture("a_rank1.mat"),
        "--formula",
        "C7",
        "--inner",
        &fixture("a_rank1_mp.mat"),
    ]);
    assert_eq!(via_formula.status.code(), Some(0), "{}", stderr(&via_formula));
    let head = |o: &Output| stdout(o).lines().take(4).collect::<Vec<_>>().join("\n");
    assert_eq!(head(&direct), head(&via_formula));
}

#[test]
fn verify_reports_each_axiom() {
    let out = run(&[
        "verify",
        "--kind",
        "mp",
        "--input",
        &fixture("a_rank1.mat"),
        "--candidate",
        &fixture("a_rank1_mp.mat"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for eq in ["a x a = a", "x a x = x", "(a x)* = a x", "(x a)* = x a"] {
        assert!(text.contains(&format!("{eq}: pass")), "{text}");
    }

    let bad = run(&[
        "verify",
        "--kind",
        "mp",
        "--input",
        &fixture("a_rank1.mat"),
        "--candidate",
        &fixture("a_rank1.mat"),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("(a x)* = a x: fail"));
}

#[test]
fn check_is_deterministic() {
    let args = [
        "check",
        "--theorem",
        "mp-units",
        "--field",
        "Qi",
        "--dim",
        "2",
        "--trials",
        "12",
        "--seed",
        "99",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).contains("violations 0"));
}

#[test]
fn oracle_compare_agrees() {
    let out = run(&["oracle", "--p", "2", "--n", "2", "--compare"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("elements 16 units 6"), "{text}");
    assert!(text.contains("mismatches 0"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["compute", "--field", "Fp:6", "--kind", "core", "--input", "x"],
        &["compute", "--field", "Q", "--kind", "bogus", "--input", "x"],
        &[
            "compute",
            "--field",
            "Q",
            "--kind",
            "core",
            "--input",
            "no_such_file.mat",
        ],
        &[
            "compute",
            "--field",
            "Q",
            "--kind",
            "core",
            "--input",
            // field mismatch between flag and file header
            "FIXTURE:ones_f2.mat",
        ],
        &[
            "compute",
            "--field",
            "Q",
            "--kind",
            "core",
            "--k",
            "9",
            "--input",
            "FIXTURE:a_rank1.mat",
        ],
        &[
            "compute",
            "--field",
            "Q",
            "--kind",
            "core",
            "--input",
            "FIXTURE:jagged.mat",
        ],
        &["check", "--theorem", "nope", "--field", "Q", "--dim", "2"],
        &["check", "--theorem", "chen", "--field", "Q", "--dim", "42"],
        &["oracle", "--p", "5"],
    ];
    for case in cases {
        let args: Vec<String> = case
            .iter()
            .map(|a| match a.strip_prefix("FIXTURE:") {
                Some(name) => fixture(name),
                None => a.to_string(),
            })
            .collect();
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "args {args:?}");
    }
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
