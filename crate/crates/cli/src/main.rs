//! `coreinv` — compute, verify and stress-test generalized inverses of
//! exact matrices from the command line.
//!
//! Exit codes: 0 success / statement holds; 1 inverse nonexistent or
//! axiom check failed; 2 input or usage error; 3 violation found by
//! `check` or `oracle`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coreinv::lab::{build_oracle, oracle_vs_algorithms, run_trials, TheoremId, TrialConfig};
use coreinv::{
    apply_formula, axiom_checks, solve, FieldSpec, FormulaError, FormulaId,
    InverseCertificate, InverseKind, StarMatrix,
};

const MAX_DIM: usize = 16;

#[derive(Parser)]
#[command(name = "coreinv", version, about = "Exact generalized inverses over Q, Q(i) and F_p")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an inverse with the canonical solver, or evaluate a
    /// catalog formula
    Compute(ComputeArgs),
    /// Check a candidate against the defining equations of an inverse kind
    Verify(VerifyArgs),
    /// Run a randomized checking campaign for one theorem
    Check(CheckArgs),
    /// Build the exhaustive finite-ring ground truth (optionally compare
    /// the algorithms against it)
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Scalar field: Q, Qi or Fp:<prime>
    #[arg(long)]
    field: String,
    /// Inverse kind: inner, 13, 14, group, mp, core, dualcore
    #[arg(long)]
    kind: String,
    /// Matrix file (field header, dimension, then rows)
    #[arg(long)]
    input: PathBuf,
    /// Inner-inverse witness file, required by formulas whose class
    /// premise needs one
    #[arg(long)]
    inner: Option<PathBuf>,
    /// Evaluate this catalog formula (C1..C12, D1..D3, G1..G4, M1..M5)
    /// instead of the canonical solver
    #[arg(long)]
    formula: Option<String>,
    /// Exponent for the k-parameterized formulas
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Root seed for any sampled witnesses
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    input: PathBuf,
    /// Candidate inverse to test
    #[arg(long)]
    candidate: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: jacobson, double-commute, reverse-order, group-units,
    /// core-units, k-core, dedekind-core, chen, one-sided-mp, mp-units,
    /// range-right, range-left
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    field: String,
    /// Matrix dimension
    #[arg(long)]
    dim: usize,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OracleArgs {
    /// Field characteristic (2 or 3)
    #[arg(long)]
    p: u64,
    /// Matrix dimension
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Also compare every solver, formula and criterion chain against the
    /// table
    #[arg(long)]
    compare: bool,
    /// Write the report to this file as well as stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A one-line diagnostic plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn outcome(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn violation(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Compute(args) => compute(&args),
        Cmd::Verify(args) => verify(&args),
        Cmd::Check(args) => check(&args),
        Cmd::Oracle(args) => oracle(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_matrix(path: &Path, field: FieldSpec) -> Result<StarMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let m = StarMatrix::parse_text(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if m.field() != field {
        return Err(Failure::usage(format!(
            "{}: file declares field {} but --field is {}",
            path.display(),
            m.field(),
            field
        )));
    }
    if m.dim() > MAX_DIM {
        return Err(Failure::usage(format!(
            "{}: dimension {} exceeds the supported maximum {MAX_DIM}",
            path.display(),
            m.dim()
        )));
    }
    Ok(m)
}

fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    FieldSpec::parse(s).map_err(|e| Failure::usage(format!("--field {s}: {e}")))
}

fn parse_kind(s: &str) -> Result<InverseKind, Failure> {
    InverseKind::parse(s)
        .ok_or_else(|| Failure::usage(format!("--kind {s}: unknown inverse kind")))
}

fn print_certificate(cert: &InverseCertificate) {
    print!("{}", cert.value);
    let summary: Vec<String> = cert
        .axiom_check
        .iter()
        .map(|(eq, ok)| format!("{eq}: {}", if *ok { "pass" } else { "fail" }))
        .collect();
    println!("axioms: {}", summary.join("; "));
    for (name, m) in &cert.witnesses {
        println!("witness {name}:");
        print!("{m}");
    }
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let field = parse_field(&args.field)?;
    let kind = parse_kind(&args.kind)?;
    if !(1..=5).contains(&args.k) {
        return Err(Failure::usage(format!("--k {}: must be in 1..=5", args.k)));
    }
    let a = load_matrix(&args.input, field)?;
    let g = args
        .inner
        .as_deref()
        .map(|p| load_matrix(p, field))
        .transpose()?;
    match &args.formula {
        None => {
            let cert = solve(kind, &a).map_err(|ne| Failure::outcome(ne.to_string()))?;
            print_certificate(&cert);
            Ok(())
        }
        Some(name) => {
            let f = FormulaId::parse(name)
                .ok_or_else(|| Failure::usage(format!("--formula {name}: unknown formula id")))?;
            if f.kind() != kind {
                return Err(Failure::usage(format!(
                    "--formula {f} computes a {} inverse, but --kind is {kind}",
                    f.kind()
                )));
            }
            match apply_formula(f, &a, g.as_ref(), args.k) {
                Ok(Ok(cert)) => {
                    print_certificate(&cert);
                    Ok(())
                }
                Ok(Err(FormulaError::NonExistent(ne))) => Err(Failure::outcome(ne.to_string())),
                Ok(Err(pv @ FormulaError::PremiseViolation { .. })) => {
                    Err(Failure::outcome(pv.to_string()))
                }
                Err(e) => Err(Failure::usage(e.to_string())),
            }
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let kind = parse_kind(&args.kind)?;
    let a_text = std::fs::read_to_string(&args.input)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.input.display())))?;
    let a = StarMatrix::parse_text(&a_text)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.input.display())))?;
    let x = load_matrix(&args.candidate, a.field())?;
    if a.dim() != x.dim() {
        return Err(Failure::usage(format!(
            "candidate is {}x{} but input is {}x{}",
            x.dim(),
            x.dim(),
            a.dim(),
            a.dim()
        )));
    }
    let checks = axiom_checks(kind, &a, &x).map_err(|e| Failure::usage(e.to_string()))?;
    let mut all = true;
    for (eq, ok) in &checks {
        println!("{eq}: {}", if *ok { "pass" } else { "fail" });
        all &= ok;
    }
    if all {
        println!("candidate is a valid {kind}-inverse");
        Ok(())
    } else {
        Err(Failure::outcome(format!(
            "candidate fails the {kind}-inverse equations"
        )))
    }
}

fn check(args: &CheckArgs) -> Result<(), Failure> {
    let theorem = TheoremId::parse(&args.theorem)
        .ok_or_else(|| Failure::usage(format!("--theorem {}: unknown theorem", args.theorem)))?;
    let field = parse_field(&args.field)?;
    if args.dim == 0 || args.dim > MAX_DIM {
        return Err(Failure::usage(format!(
            "--dim {}: must be in 1..={MAX_DIM}",
            args.dim
        )));
    }
    if args.trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    let config = TrialConfig::new(theorem, field, args.dim, args.trials, args.seed);
    let report = run_trials(&config);
    print!("{report}");
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::violation(format!(
            "{} violation(s) found",
            report.failures.len()
        )))
    }
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    if !matches!(args.p, 2 | 3) {
        return Err(Failure::usage(format!("--p {}: must be 2 or 3", args.p)));
    }
    if !matches!(args.n, 2 | 3) {
        return Err(Failure::usage(format!("--n {}: must be 2 or 3", args.n)));
    }
    let table = build_oracle(args.p, args.n).map_err(|e| Failure::usage(e.to_string()))?;
    let c = table.counts;
    let mut out = String::new();
    writeln!(out, "oracle M_{}(F_{})", args.n, args.p).unwrap();
    writeln!(
        out,
        "elements {} units {} 13 {} 14 {} group {} mp {} core {} dualcore {}",
        c.elements, c.units, c.one_three, c.one_four, c.group, c.mp, c.core, c.dual_core
    )
    .unwrap();
    let mut violations = 0;
    if args.compare {
        let report = oracle_vs_algorithms(&table);
        violations = report.mismatches.len();
        writeln!(
            out,
            "compare checked {} mismatches {}",
            report.elements_checked, violations
        )
        .unwrap();
        for v in &report.mismatches {
            writeln!(out, "mismatch: {}", v.detail).unwrap();
            for (name, m) in &v.matrices {
                writeln!(out, "{name}:").unwrap();
                write!(out, "{m}").unwrap();
            }
        }
    }
    print!("{out}");
    if let Some(path) = &args.out {
        std::fs::write(path, &out)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    if violations == 0 {
        Ok(())
    } else {
        Err(Failure::violation(format!("{violations} mismatch(es)")))
    }
}
