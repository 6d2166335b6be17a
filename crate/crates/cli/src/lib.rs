//! Command-line front end: matrix files, orthogonality queries, witnesses,
//! suites and example reproduction.

pub mod matrix_file;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use oportho::hilbert::{bj_spectral_full, disjoint_support, gamma_test, GammaOutcome};
use oportho::ortho::{
    bj_check, iso_check, roberts_check_with_probes, si_check_depth, xplus_xminus, Decision, OrthReport, Relation,
};
use oportho::verify::{self, FieldChoice, Instance, Suite, SuiteConfig, TrialOutcome};
use oportho::{linalg, NormDescriptor, NormedElement, Tolerances, C64};
use serde_json::{json, Value};

use crate::matrix_file::{parse_norm, read_matrix_file, FileError};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "oportho", version, about = "Orthogonality relations between matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one relation between two matrices.
    Check(CheckArgs),
    /// Birkhoff-James witness from the spectral criterion.
    Witness(PairArgs),
    /// Run every applicable relation on a pair.
    Analyze(PairArgs),
    /// Run a randomized theorem suite.
    Verify(VerifyArgs),
    /// Re-run a recorded suite failure.
    Replay(ReplayArgs),
    /// Recompute the reference examples.
    Reproduce(JsonFlag),
}

#[derive(Debug, Args)]
pub struct JsonFlag {
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// operator | schatten | vector-p; overrides the files.
    #[arg(long)]
    pub norm: Option<String>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = oportho::ortho::DEFAULT_SI_DEPTH)]
    pub depth: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// bj | iso | roberts | r-orth | x-plus | x-minus | si | disjoint
    #[arg(long)]
    pub relation: String,
    /// Extra Roberts probe scalars.
    #[arg(long = "probe", allow_hyphen_values = true)]
    pub probes: Vec<f64>,
    #[command(flatten)]
    pub pair: PairArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Comma-separated dimensions.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4, 5, 6])]
    pub dims: Vec<usize>,
    /// real | complex | both
    #[arg(long, default_value = "both")]
    pub field: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[arg(long)]
    pub suite: String,
    /// A failure record as printed by `verify --json`.
    pub record: PathBuf,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug)]
pub enum CliError {
    File(FileError),
    Core(oportho::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::File(e) => e.fmt(f),
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::File(e)
    }
}

impl From<oportho::Error> for CliError {
    fn from(e: oportho::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command produced: the exit code, stdout and diagnostic text.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(d: Decision) -> i32 {
    match d {
        Decision::Holds => EXIT_HOLDS,
        Decision::Fails => EXIT_FAILS,
        Decision::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn tolerances(tol: Option<f64>) -> Result<Tolerances, CliError> {
    let t = Tolerances::default();
    Ok(match tol {
        Some(eq) => t.with_eq_tol(eq)?,
        None => t,
    })
}

fn load_pair(args: &PairArgs) -> Result<(NormedElement, NormedElement), CliError> {
    let norm = match &args.norm {
        Some(kind) => Some(parse_norm(kind, args.p)?),
        None if args.p.is_some() => return Err(CliError::Usage("--p needs --norm".into())),
        None => None,
    };
    let left = read_matrix_file(&args.left)?.to_element(norm)?;
    let right = read_matrix_file(&args.right)?.to_element(norm)?;
    Ok((left, right))
}

fn summary(r: &OrthReport) -> String {
    let mut s = format!("{}: {} (margin {:e}, band {:e})", r.relation, r.decision, r.margin, r.band);
    if let Some(l) = r.evidence.lambda {
        s += &format!(", lambda {}", fmt_scalar(l));
    }
    for (k, v) in &r.evidence.quantities {
        s += &format!(", {k} {v}");
    }
    for n in &r.notes {
        s += &format!("\n  note: {n}");
    }
    s
}

fn fmt_scalar(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

pub fn parse_relation(name: &str) -> Result<Relation, CliError> {
    Ok(match name {
        "bj" => Relation::BirkhoffJames,
        "iso" => Relation::Isosceles,
        "roberts" => Relation::Roberts,
        "r-orth" => Relation::ROrthogonal,
        "x-plus" => Relation::XPlus,
        "x-minus" => Relation::XMinus,
        "si" => Relation::StrongIsosceles,
        "disjoint" => Relation::DisjointSupport,
        other => return Err(CliError::Usage(format!("unknown relation {other:?}"))),
    })
}

pub fn decide(
    relation: Relation,
    x: &NormedElement,
    y: &NormedElement,
    tol: &Tolerances,
    depth: u32,
    probes: &[f64],
) -> Result<OrthReport, CliError> {
    Ok(match relation {
        Relation::BirkhoffJames => bj_check(x, y, tol)?,
        Relation::Isosceles => iso_check(x, y, tol)?,
        Relation::Roberts => {
            let probes: Vec<C64> = probes.iter().map(|&p| C64::new(p, 0.0)).collect();
            roberts_check_with_probes(x, y, tol, &probes)?
        }
        Relation::ROrthogonal => xplus_xminus(x, y, tol)?.combined(),
        Relation::XPlus => xplus_xminus(x, y, tol)?.plus,
        Relation::XMinus => xplus_xminus(x, y, tol)?.minus,
        Relation::StrongIsosceles => si_check_depth(x, y, tol, depth)?,
        Relation::DisjointSupport => disjoint_report(x, y, tol)?,
    })
}

fn disjoint_report(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport, CliError> {
    let (a, b) = (x.value(), y.value());
    let holds = disjoint_support(a, b, tol)?;
    let left = linalg::spectral_norm(&(a * &b.adjoint()));
    let right = linalg::spectral_norm(&(&b.adjoint() * a));
    let scale = linalg::spectral_norm(a) * linalg::spectral_norm(b);
    let mut r = OrthReport::from_margin(Relation::DisjointSupport, -left.max(right), tol.eq_tol * scale);
    r.decision = if holds { Decision::Holds } else { Decision::Fails };
    r.evidence.quantities = vec![("norm_a_bstar", left), ("norm_bstar_a", right)];
    Ok(r)
}

fn cmd_check(args: &CheckArgs) -> Result<Outcome, CliError> {
    let relation = parse_relation(&args.relation)?;
    let tol = tolerances(args.pair.tol)?;
    let (x, y) = load_pair(&args.pair)?;
    let r = decide(relation, &x, &y, &tol, args.pair.depth, &args.probes)?;
    Ok(Outcome {
        code: exit_code(r.decision),
        stdout: if args.pair.json { report::render(&report::orth_report(&r)) + "\n" } else { String::new() },
        stderr: summary(&r) + "\n",
    })
}

fn cmd_witness(args: &PairArgs) -> Result<Outcome, CliError> {
    let tol = tolerances(args.tol)?;
    let (t, a) = load_pair(args)?;
    if t.descriptor() != NormDescriptor::OperatorTwo || a.descriptor() != NormDescriptor::OperatorTwo {
        return Err(CliError::Usage("witness needs the operator norm".into()));
    }
    let s = bj_spectral_full(t.value(), a.value(), &tol)?;
    let doc = json!({
        "report": report::orth_report(&s.report),
        "witness": s.witness.as_ref().map(report::witness),
        "attainment_dim": s.attainment.subspace.dim(),
    });
    let (code, stderr) = match (&s.witness, s.report.decision) {
        (Some(w), Decision::Holds) => (
            EXIT_HOLDS,
            format!(
                "witness found: attainment residual {:e}, pairing residual {:e}\n",
                w.attainment_residual, w.pairing_residual
            ),
        ),
        (None, Decision::Holds) => (EXIT_INCONCLUSIVE, "criterion holds but no witness was validated\n".into()),
        (_, Decision::Fails) => (
            EXIT_FAILS,
            format!("T is not Birkhoff-James orthogonal to A: 0 lies outside W(K) by {:e}\n", -s.report.margin),
        ),
        (_, Decision::Inconclusive) => (EXIT_INCONCLUSIVE, summary(&s.report) + "\n"),
    };
    Ok(Outcome { code, stdout: report::render(&doc) + "\n", stderr })
}

fn cmd_analyze(args: &PairArgs) -> Result<Outcome, CliError> {
    let tol = tolerances(args.tol)?;
    let (x, y) = load_pair(args)?;
    let real = x.field().join(y.field()).is_real();
    let mut relations = vec![Relation::BirkhoffJames, Relation::Isosceles, Relation::Roberts];
    if real {
        relations.extend([Relation::ROrthogonal, Relation::StrongIsosceles]);
    }
    let square_ops = x.value().is_square() && x.value().shape() == y.value().shape();
    if square_ops {
        relations.push(Relation::DisjointSupport);
    }
    let mut out = serde_json::Map::new();
    let mut text = String::new();
    for rel in relations {
        let r = decide(rel, &x, &y, &tol, args.depth, &[])?;
        text += &(summary(&r) + "\n");
        out.insert(rel.name().to_string(), report::orth_report(&r));
    }
    if square_ops && x.descriptor() == NormDescriptor::OperatorTwo && !x.value().is_zero() {
        let s = bj_spectral_full(x.value(), y.value(), &tol)?;
        text += &format!("spectral bj: {} (margin {:e})\n", s.report.decision, s.report.margin);
        out.insert(
            "bj-spectral".into(),
            json!({ "report": report::orth_report(&s.report), "witness": s.witness.as_ref().map(report::witness) }),
        );
        let g = gamma_test(x.value(), y.value(), verify::GAMMA_SAMPLES, args.seed, &tol)?;
        let gv = match g {
            GammaOutcome::MemberEvidence(c) => json!({ "outcome": "member", "certificate": format!("{c:?}") }),
            GammaOutcome::Counterexample { x1, x2, sum } => json!({
                "outcome": "counterexample",
                "x1": report::vector(&x1),
                "x2": report::vector(&x2),
                "sum": report::complex(sum),
            }),
            GammaOutcome::NoCounterexampleFound { samples } => json!({ "outcome": "none-found", "samples": samples }),
        };
        text += &format!("gamma: {}\n", gv["outcome"].as_str().unwrap_or(""));
        out.insert("gamma".into(), gv);
    }
    Ok(Outcome {
        code: EXIT_HOLDS,
        stdout: if args.json { report::render(&Value::Object(out)) + "\n" } else { String::new() },
        stderr: text,
    })
}

pub fn suite_config(args: &VerifyArgs) -> Result<SuiteConfig, CliError> {
    let suite: Suite = args.suite.parse()?;
    let field: FieldChoice = args.field.parse()?;
    let mut cfg = SuiteConfig::new(suite, args.trials, args.dims.clone(), field, args.seed);
    cfg.tolerances = tolerances(args.tol)?;
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let cfg = suite_config(args)?;
    let r = verify::run_suite(&cfg)?;
    let mut stderr = format!(
        "{}: {} passed, {} failed, {} inconclusive of {}\n",
        r.suite, r.passed, r.failed, r.inconclusive, r.trials
    );
    for f in &r.failures {
        stderr += &format!("  trial {} ({}): {}\n", f.offset, f.instance.construction, f.detail);
    }
    Ok(Outcome {
        code: if r.clean() { EXIT_HOLDS } else { EXIT_FAILS },
        stdout: report::render(&report::suite_result(&cfg, &r)) + "\n",
        stderr,
    })
}

fn cmd_replay(args: &ReplayArgs) -> Result<Outcome, CliError> {
    let suite: Suite = args.suite.parse()?;
    let tol = tolerances(args.tol)?;
    let text = std::fs::read_to_string(&args.record)
        .map_err(|e| FileError::Io { path: args.record.display().to_string(), message: e.to_string() })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| FileError::Parse(e.to_string()))?;
    let inst_v = if v.get("instance").is_some() { &v["instance"] } else { &v };
    let (construction, seed, elements) = report::parse_instance(inst_v)?;
    let inst = Instance::new(construction, seed, elements);
    let (code, verdict) = match verify::replay(suite, &inst, &tol) {
        TrialOutcome::Passed => (EXIT_HOLDS, json!({ "outcome": "passed" })),
        TrialOutcome::Inconclusive(m) => (EXIT_INCONCLUSIVE, json!({ "outcome": "inconclusive", "detail": m })),
        TrialOutcome::Failed(m) => (EXIT_FAILS, json!({ "outcome": "failed", "detail": m })),
    };
    Ok(Outcome {
        code,
        stderr: format!("{}\n", verdict["outcome"].as_str().unwrap_or("")),
        stdout: report::render(&verdict) + "\n",
    })
}

fn cmd_reproduce() -> Result<Outcome, CliError> {
    let rows = verify::reproduce_examples()?;
    let mut stderr = String::new();
    for r in &rows {
        stderr += &format!(
            "{:<12} {:<22} expected {:<24} computed {:<24} |d| {:e}{}\n",
            r.id,
            r.quantity,
            r.expected,
            r.computed,
            r.delta,
            if r.ok() { "" } else { "  MISMATCH" }
        );
    }
    let clean = rows.iter().all(|r| r.ok());
    Ok(Outcome {
        code: if clean { EXIT_HOLDS } else { EXIT_FAILS },
        stdout: report::render(&report::example_rows(&rows)) + "\n",
        stderr,
    })
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Replay(a) => cmd_replay(a),
        Command::Reproduce(_) => cmd_reproduce(),
    };
    result.unwrap_or_else(|e| Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") })
}

/// Parses `argv`, executes, and writes both streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_HOLDS };
            let _ = e.print();
            return code;
        }
    };
    let out = execute(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
