use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use plastic_core::genfunc::ogf;
use plastic_core::harness::grid::{parse_grid_with_cap, ParamGrid, DEFAULT_POINT_CAP};
use plastic_core::harness::{run_suite_with, Report, SuiteConfig, SuiteOptions};
use plastic_core::identities::catalog_list;
use plastic_core::numeric::{cubic_roots, series_expand, vandermonde_det, Poly};
use plastic_core::sequences::Seq;
use plastic_core::SeqEngine;

const CONFIG_ENV: &str = "PLASTIC_KIT_CONFIG";

/// Exact Padovan and Perrin computations and identity verification.
#[derive(Parser, Debug)]
#[command(name = "plastic-kit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one term of a sequence.
    Term {
        #[arg(long)]
        seq: Seq,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// List the identity catalog.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Check identities over parameter grids.
    Verify {
        /// Glob over identity ids.
        #[arg(long, default_value = "*")]
        id: String,
        /// Axes replacing the default grid, e.g. "p=-3..3;n=0,5".
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Worker threads; defaults to the config value, then to the CPU count.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here; "-" for standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Leave the timestamp out of the report.
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Expand a generating function.
    Expand {
        #[arg(long, value_enum, default_value_t = Kind::Ogf)]
        kind: Kind,
        #[arg(long)]
        seq: Seq,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Highest coefficient index.
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the roots of x^3 - x - 1.
    Roots {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Ogf,
}

/// Failure that maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Term { seq, n } => {
            println!("{}", SeqEngine::global().term(seq, n));
        }
        Command::Catalog { json } => {
            let list = catalog_list();
            if json {
                println!("{}", serde_json::to_string_pretty(&list)?);
            } else {
                let width = list.iter().map(|s| s.id.len()).max().unwrap_or(0);
                for s in &list {
                    let flag = if s.errata_watch { " [errata-watch]" } else { "" };
                    println!("{:width$}  {}{flag}", s.id, s.title);
                }
            }
        }
        Command::Verify { id, grid, jobs, json, config, no_timestamp } => {
            return verify(id, grid, jobs, json, config, !no_timestamp);
        }
        Command::Expand { kind: Kind::Ogf, seq, p, q, order, json } => {
            let f = ogf(p, q, seq)?;
            let series = series_expand(&f, order)?;
            if json {
                let coeffs = |poly: &Poly| poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
                let out = json!({
                    "kind": "ogf",
                    "seq": seq,
                    "p": p,
                    "q": q,
                    "numerator": coeffs(f.numer()),
                    "denominator": coeffs(f.denom()),
                    "coefficients": series,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("numerator:    {}", f.numer());
                println!("denominator:  {}", f.denom());
                let cs: Vec<String> = series.coeffs.iter().map(|c| c.to_string()).collect();
                println!("coefficients: {}", cs.join(" "));
            }
        }
        Command::Roots { json } => {
            let r = cubic_roots();
            let v = vandermonde_det(&r.all());
            if json {
                let c = |z: plastic_core::numeric::ComplexF| json!({"re": z.re, "im": z.im});
                let out = json!({
                    "alpha": r.alpha,
                    "beta": c(r.beta),
                    "gamma": c(r.gamma),
                    "vandermonde": c(v),
                    "vandermonde_modulus": v.norm(),
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("alpha = {:.15}", r.alpha);
                println!("beta  = {:.15} {:+.15}i", r.beta.re, r.beta.im);
                println!("gamma = {:.15} {:+.15}i", r.gamma.re, r.gamma.im);
                println!("vandermonde = {:.15} {:+.15}i (modulus {:.15})", v.re, v.im, v.norm());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    filter: String,
    grid: Option<String>,
    jobs: Option<usize>,
    json: Option<PathBuf>,
    config_path: Option<PathBuf>,
    timestamp: bool,
) -> Result<ExitCode, UsageError> {
    let config_path = config_path.or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let config = match &config_path {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    let cap = config.point_cap.unwrap_or(DEFAULT_POINT_CAP);
    let overrides = match grid {
        Some(text) => parse_grid_with_cap(&text, cap)?,
        None => ParamGrid::default(),
    };
    let jobs = jobs
        .or(config.jobs)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let opts = SuiteOptions {
        filter,
        overrides,
        jobs,
        point_cap: cap,
        config,
        timestamp,
        ..SuiteOptions::default()
    };
    let report = run_suite_with(&opts)?;
    let to_stdout = json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        print_report(&report);
    }
    if let Some(path) = json {
        let text = report.to_json();
        if to_stdout {
            println!("{text}");
        } else {
            std::fs::write(&path, text + "\n").map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn print_report(report: &Report) {
    let width = report.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in &report.results {
        let status = match (r.failure_count, r.errata_watch) {
            (0, _) => "ok",
            (_, true) => "errata",
            (_, false) => "FAIL",
        };
        println!(
            "{:width$}  {status:6}  tested {:>7}  passed {:>7}  failed {:>6}  skipped {:>6}",
            r.id, r.points_tested, r.passes, r.failure_count, r.skipped
        );
        for f in r.failures.iter().take(if r.errata_watch { 0 } else { 3 }) {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("    at {}: lhs {} rhs {}", params.join(" "), f.lhs, f.rhs);
        }
    }
    for f in &report.errata_findings {
        match &f.first_counterexample {
            None => println!("errata {}: printed form holds on all {} points", f.id, f.points_tested),
            Some(c) => {
                let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "errata {}: {} of {} points fail, first at {} (lhs {} rhs {})",
                    f.id,
                    f.failure_count,
                    f.points_tested,
                    params.join(" "),
                    c.lhs,
                    c.rhs
                );
                match &f.correction {
                    Some(fix) => {
                        let plural = if fix.edits == 1 { "" } else { "s" };
                        println!("    corrected by: {} ({} edit{plural})", fix.label, fix.edits)
                    }
                    None => println!("    no listed correction holds ({} tried)", f.corrections_tried),
                }
            }
        }
    }
    let s = &report.summary;
    println!(
        "{} identities, {} points: {} passed, {} failed, {} errata failures, {} skipped",
        s.identities, s.points_tested, s.passes, s.failures, s.errata_failures, s.skipped
    );
}
