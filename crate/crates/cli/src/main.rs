//! Command-line front end: analyze a problem file, verify classification
//! cases by sweep, or search parameter boxes for critical points.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use harmlie::classification::{theorem_catalog, verify_case, verify_equivalence, SweepResult};
use harmlie::report::{frame_notes, report_json, ProblemSpec, ReportJson};
use harmlie::search::{minimize, scan_biharmonic_not_harmonic, SearchSpec};
use harmlie::{analyze, AlgebraId, Error};

#[derive(Parser)]
#[command(name = "harmlie", version, about = "harmonic/biharmonic analysis of 3D unimodular metric Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one problem file: tension, bitension, test matrix, verdicts.
    Analyze(AnalyzeArgs),
    /// Sweep classification cases and report failures.
    Verify(VerifyArgs),
    /// Minimize tension/bitension norms over a parameter box.
    Search(SearchArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Problem description (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Verdict tolerance (relative, float path).
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Machine report destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Force the exact rational path.
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Force the float path.
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to one algebra group (nil, e02, sol, su2, sl2).
    #[arg(long)]
    group: Option<String>,
    /// Restrict to one case id or id prefix (e.g. thm4.2.1 or thm6.1.9).
    #[arg(long = "case")]
    cases: Vec<String>,
    /// Samples per case and direction.
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Machine report destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Search specification (JSON).
    #[arg(long)]
    spec: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Machine report destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn write_out(out: &Option<PathBuf>, payload: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, payload)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{payload}")?;
        }
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    if args.tol <= 0.0 {
        anyhow::bail!("tolerance must be positive");
    }
    let text = fs::read_to_string(&args.input)?;
    let spec = ProblemSpec::from_json(&text)?;
    let use_float = if args.exact {
        if spec.needs_float() {
            return Err(Error::InvalidInput(
                "this problem instantiates rotation/boost angles; the exact path cannot \
                 represent it"
                    .into(),
            )
            .into());
        }
        false
    } else {
        args.float || spec.needs_float()
    };

    let report: ReportJson = if use_float {
        let p = spec.build_f64()?;
        report_json(&analyze(&p, args.tol), vec![])
    } else {
        let p = spec.build_exact()?;
        let notes = frame_notes(&p);
        report_json(&analyze(&p, args.tol), notes)
    };
    println!(
        "algebra {}  path {}  harmonic {}  biharmonic {}  |tau| {:.3e}  |tau2| {:.3e}  det(M) {:.6e}",
        spec.algebra,
        report.arithmetic_path,
        report.harmonic,
        report.biharmonic,
        report.tau.iter().fold(0.0f64, |m, x| m.max(x.abs())),
        report.tau2.iter().fold(0.0f64, |m, x| m.max(x.abs())),
        report.det_test,
    );
    write_out(&args.out, &serde_json::to_string_pretty(&report)?)?;
    Ok(ExitCode::SUCCESS)
}

/// Equivalence sweeps surfaced as verification entries alongside the case
/// catalog.
const EQUIVALENCE_ENTRIES: [(&str, AlgebraId); 2] =
    [("thm3.1.equiv", AlgebraId::Nil), ("thm5.2", AlgebraId::Sol)];

fn matches_filter(id: &str, group: Option<AlgebraId>, entry_group: AlgebraId, cases: &[String]) -> bool {
    if let Some(g) = group {
        if g != entry_group {
            return false;
        }
    }
    if cases.is_empty() {
        return true;
    }
    cases
        .iter()
        .any(|c| id == c || id.starts_with(&format!("{c}.")))
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.n == 0 {
        anyhow::bail!("sample count must be >= 1");
    }
    let group = match &args.group {
        Some(g) => Some(g.parse::<AlgebraId>()?),
        None => None,
    };
    let catalog = theorem_catalog();

    // validate case filters before running anything
    for wanted in &args.cases {
        let known = catalog
            .iter()
            .any(|c| matches_filter(c.id, None, c.group, std::slice::from_ref(wanted)))
            || EQUIVALENCE_ENTRIES
                .iter()
                .any(|(id, g)| matches_filter(id, None, *g, std::slice::from_ref(wanted)));
        if !known {
            return Err(Error::UnknownCase(wanted.clone()).into());
        }
    }

    let mut results: Vec<SweepResult> = Vec::new();
    for case in &catalog {
        if matches_filter(case.id, group, case.group, &args.cases) {
            results.push(verify_case(case, args.n, args.seed, args.tol)?);
        }
    }
    for (id, alg) in EQUIVALENCE_ENTRIES {
        if matches_filter(id, group, alg, &args.cases) {
            let mut res = verify_equivalence(alg, args.n, args.seed, args.tol)?;
            res.id = id.to_string();
            results.push(res);
        }
    }
    if results.is_empty() {
        anyhow::bail!("no cases matched the given filters");
    }

    let mut any_failures = false;
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        any_failures |= !r.passed();
        let tally = r
            .probe_tally
            .as_ref()
            .map(|t| {
                format!(
                    "  [probe: harmonic {}, biharmonic-not-harmonic {}, neither {}]",
                    t.harmonic, t.biharmonic_not_harmonic, t.neither
                )
            })
            .unwrap_or_default();
        println!(
            "{status} {:<18} on-locus {:>5}  generic {:>5}  boundary-skipped {:>3}  failures {}{}",
            r.id,
            r.n_condition_samples,
            r.n_generic_samples,
            r.n_boundary_skipped,
            r.failures.len(),
            tally,
        );
    }
    write_out(&args.out, &serde_json::to_string_pretty(&results)?)?;
    Ok(if any_failures {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum SearchMode {
    Minimize,
    Scan,
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::Minimize
    }
}

#[derive(Deserialize)]
struct SearchFile {
    #[serde(flatten)]
    spec: SearchSpec,
    #[serde(default)]
    mode: SearchMode,
    /// Starts for scan mode.
    #[serde(default = "default_starts")]
    n_starts: usize,
}

fn default_starts() -> usize {
    100
}

fn cmd_search(args: SearchArgs) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(&args.spec)?;
    let file: SearchFile =
        serde_json::from_str(&text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    match file.mode {
        SearchMode::Minimize => {
            let res = minimize(&file.spec, args.seed)?;
            println!(
                "minimize {:?}: objective {:.3e} after {} evals over {} restarts, converged {}",
                file.spec.objective, res.objective, res.evals, res.restarts_used, res.converged
            );
            for (name, value) in &res.minimizer {
                println!("  {name} = {value:.9}");
            }
            write_out(&args.out, &serde_json::to_string_pretty(&res)?)?;
        }
        SearchMode::Scan => {
            let witnesses = scan_biharmonic_not_harmonic(&file.spec, file.n_starts, args.seed)?;
            println!(
                "scan: {} biharmonic-not-harmonic witnesses from {} starts",
                witnesses.len(),
                file.n_starts
            );
            for w in witnesses.iter().take(10) {
                let params: Vec<String> = w
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v:.6}"))
                    .collect();
                println!(
                    "  |tau|^2 {:.3e}  |tau2|^2 {:.3e}  {}",
                    w.tension_norm_sq,
                    w.bitension_norm_sq,
                    params.join(" ")
                );
            }
            write_out(&args.out, &serde_json::to_string_pretty(&witnesses)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
