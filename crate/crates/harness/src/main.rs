use std::path::{Path, PathBuf};
use std::process::ExitCode;

use amalgam::{conj, inv, membership, mul, GroupWord, Subgroup};
use amalgam_harness::{parse_element, run_all, run_suite, Config, Outcome, Report, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exact arithmetic and verification checks for the amalgam tower over K ⋊ SL(3,Z).
#[derive(Debug, Parser)]
#[command(name = "amalgam", version)]
struct Cli {
    /// Comma-separated distinct primes p_0, p_1, ...
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7, 11])]
    primes: Vec<u64>,

    #[arg(long, global = true, default_value_t = amalgam_harness::config::DEFAULT_SEED)]
    seed: u64,

    /// Floating-point tolerance for numerical checks.
    #[arg(long, global = true, default_value_t = amalgam_harness::config::DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Maximum number of points a check may enumerate.
    #[arg(long, global = true, default_value_t = amalgam_harness::config::DEFAULT_SIZE_GUARD)]
    size_guard: u128,

    /// Word-length radius for ball enumerations.
    #[arg(long, global = true)]
    radius: Option<usize>,

    /// Restrict level-indexed checks to this level.
    #[arg(long, global = true)]
    level: Option<usize>,

    /// Sample count for randomized checks.
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Report file, or a directory of per-suite files for `verify all`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Operations on single elements.
    Elem {
        #[command(subcommand)]
        op: ElemOp,
    },
    /// Run a verification suite.
    Verify { suite: SuiteArg },
}

#[derive(Debug, Subcommand)]
enum ElemOp {
    /// Print the reduced form.
    Reduce { element: String },
    /// Print a * b.
    Mul { a: String, b: String },
    /// Print the inverse.
    Inv { element: String },
    /// Print h * g * h^-1.
    Conj { g: String, h: String },
    /// Test membership in K, K_N, Lambda or G_N (written K, K_3, Lambda, G_2).
    Member { element: String, subgroup: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Icc,
    Orbits,
    Fourier,
    Xi,
    Disjoint,
    Bound,
    All,
}

impl SuiteArg {
    fn suite(self) -> Option<Suite> {
        Some(match self {
            SuiteArg::Icc => Suite::Icc,
            SuiteArg::Orbits => Suite::Orbits,
            SuiteArg::Fourier => Suite::Fourier,
            SuiteArg::Xi => Suite::Xi,
            SuiteArg::Disjoint => Suite::Disjoint,
            SuiteArg::Bound => Suite::Bound,
            SuiteArg::All => return None,
        })
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn config(cli: &Cli) -> Result<Config, String> {
    let mut cfg = Config::with_primes(cli.primes.clone()).map_err(|e| e.to_string())?;
    cfg.seed = cli.seed;
    cfg.tolerance = cli.tolerance;
    cfg.size_guard = cli.size_guard;
    cfg.radius = cli.radius;
    cfg.level = cli.level;
    cfg.samples = cli.samples;
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cfg = config(&cli)?;
    match &cli.command {
        Command::Elem { op } => elem(op, &cfg, cli.out.as_deref()),
        Command::Verify { suite } => verify(*suite, &cfg, cli.out.as_deref()),
    }
}

fn parse(text: &str, cfg: &Config) -> Result<GroupWord, String> {
    parse_element(text, &cfg.primes).map_err(|e| format!("'{text}': {e}"))
}

fn subgroup(text: &str) -> Result<Subgroup, String> {
    let t = text.trim();
    let level = |rest: &str| rest.parse::<usize>().map_err(|_| format!("bad subgroup '{text}'"));
    match t {
        "K" => Ok(Subgroup::K),
        "Lambda" | "L" => Ok(Subgroup::Lambda),
        _ => {
            if let Some(rest) = t.strip_prefix("K_") {
                Ok(Subgroup::KTail(level(rest)?))
            } else if let Some(rest) = t.strip_prefix("G_") {
                Ok(Subgroup::Level(level(rest)?))
            } else {
                Err(format!("bad subgroup '{text}', expected K, K_N, Lambda or G_N"))
            }
        }
    }
}

fn elem(op: &ElemOp, cfg: &Config, out: Option<&Path>) -> Result<ExitCode, String> {
    let (name, inputs, result) = match op {
        ElemOp::Reduce { element } => ("reduce", vec![element], parse(element, cfg)?.to_string()),
        ElemOp::Mul { a, b } => ("mul", vec![a, b], mul(&parse(a, cfg)?, &parse(b, cfg)?).to_string()),
        ElemOp::Inv { element } => ("inv", vec![element], inv(&parse(element, cfg)?).to_string()),
        ElemOp::Conj { g, h } => ("conj", vec![g, h], conj(&parse(g, cfg)?, &parse(h, cfg)?).to_string()),
        ElemOp::Member { element, subgroup: sub } => {
            let w = parse(element, cfg)?;
            ("member", vec![element, sub], membership(&w, subgroup(sub)?).to_string())
        }
    };
    println!("{result}");
    if let Some(path) = out {
        let record = json!({ "op": name, "inputs": inputs, "result": result });
        let text = serde_json::to_string_pretty(&record).expect("record serializes") + "\n";
        std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(arg: SuiteArg, cfg: &Config, out: Option<&Path>) -> Result<ExitCode, String> {
    let reports = match arg.suite() {
        Some(s) => vec![run_suite(s, cfg)],
        None => run_all(cfg),
    };
    for r in &reports {
        print_report(r);
    }
    if let Some(path) = out {
        match arg.suite() {
            Some(_) => write(path, &reports[0])?,
            None => {
                std::fs::create_dir_all(path).map_err(|e| format!("creating {}: {e}", path.display()))?;
                for r in &reports {
                    write(&path.join(format!("{}.json", r.suite)), r)?;
                }
            }
        }
    }
    let failed = reports.iter().any(Report::failed);
    Ok(if failed { ExitCode::from(EXIT_FAIL) } else { ExitCode::SUCCESS })
}

fn write(path: &Path, report: &Report) -> Result<(), String> {
    std::fs::write(path, report.to_json()).map_err(|e| format!("writing {}: {e}", path.display()))
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "FAIL",
        Outcome::Skipped => "skip",
    }
}

fn print_report(r: &Report) {
    for c in &r.checks {
        let reason = c.reason.as_deref().map(|s| format!(" ({s})")).unwrap_or_default();
        println!("{:<4} {}/{} {}{} [{} ms]", outcome(c.outcome), r.suite, c.name, c.parameters, reason, c.elapsed_ms);
    }
    println!(
        "suite {}: {} ({} passed, {} failed, {} skipped) [{} ms]",
        r.suite,
        outcome(r.outcome),
        r.passed,
        r.failed,
        r.skipped,
        r.elapsed_ms
    );
}
