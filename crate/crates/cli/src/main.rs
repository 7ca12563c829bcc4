//! `adeg`: run session scripts, the bundled corpus, or the invariant suites.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 theorem violation or
//! failed invariant, 3 resource cap.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adeg::checks;
use adeg::corpus::{bundled, run_corpus, CorpusRun};
use adeg::run::{exit_code, render, run_script, worst, RunConfig};
use adeg::session::{parse_session, OrderName};
use clap::{Args, Parser, Subcommand};

/// The only environment variable read: where reproducers are written.
const CACHE_ENV: &str = "ADEG_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "adeg",
    version,
    about = "Arithmetic degrees and bigraded multiplicities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the tasks of a session script.
    Run(RunArgs),
    /// Run the bundled corpus and print a summary table.
    Corpus(CorpusArgs),
    /// Run the invariant suites.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
struct Caps {
    /// Term order for Gröbner bases (degrevlex or lex).
    #[arg(long, value_parser = parse_order)]
    order: Option<OrderName>,
    /// Cap on S-pair degrees.
    #[arg(long = "max-deg", value_name = "N")]
    max_deg: Option<u32>,
    /// Cap on the number of basis elements.
    #[arg(long = "max-basis", value_name = "N")]
    max_basis: Option<usize>,
    /// Worker threads.
    #[arg(long, value_name = "K", default_value_t = 1)]
    parallel: usize,
    /// Include wall-clock timings (the output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Session script.
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    input: PathBuf,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Write the full JSON report.
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Write the CSV summary (entry, task, i, value, status).
    #[arg(long, value_name = "OUT")]
    csv: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Worker threads for the corpus-based suites.
    #[arg(long, value_name = "K", default_value_t = 1)]
    parallel: usize,
}

fn parse_order(s: &str) -> Result<OrderName, String> {
    OrderName::parse(s).ok_or_else(|| format!("unknown order '{s}' (expected degrevlex or lex)"))
}

fn config(caps: &Caps) -> RunConfig {
    RunConfig {
        order: caps.order,
        max_deg: caps.max_deg,
        max_basis: caps.max_basis,
        timings: caps.timings,
        cache_dir: std::env::var_os(CACHE_ENV).map(PathBuf::from),
    }
}

fn check_parallel(k: usize) -> Result<(), i32> {
    if k == 0 {
        eprintln!("error: --parallel must be at least 1");
        return Err(1);
    }
    Ok(())
}

fn write_out(path: &Path, text: &str) -> Result<(), i32> {
    fs::write(path, text).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        1
    })
}

fn cmd_run(args: &RunArgs) -> Result<i32, i32> {
    let text = fs::read_to_string(&args.input).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", args.input.display());
        1
    })?;
    let script = parse_session(&text).map_err(|e| {
        eprintln!("error: {}: {e}", args.input.display());
        exit_code(&e)
    })?;
    // Tasks of one script run in order; `--parallel` matters for the corpus.
    check_parallel(args.caps.parallel)?;
    let cfg = config(&args.caps);
    let report = run_script(&script, &cfg).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    })?;
    let out = render(&report.to_json());
    match &args.json {
        Some(p) => write_out(p, &out)?,
        None => print!("{out}"),
    }
    for o in &report.outcomes {
        if let Err(m) = &o.value {
            eprintln!("task {}: {m}", o.task);
            if let Some(p) = &o.reproducer {
                eprintln!("  reproducer: {}", p.display());
            }
        }
    }
    Ok(report.code)
}

fn summary(run: &CorpusRun) -> String {
    let mut s = String::new();
    let width = run
        .entries
        .iter()
        .map(|e| e.id.len())
        .max()
        .unwrap_or(5)
        .max(5);
    s += &format!(
        "{:<width$}  {:>5}  {:>8}  status\n",
        "entry", "tasks", "expected"
    );
    for e in &run.entries {
        let tasks = e.report.as_ref().map_or(0, |r| r.outcomes.len());
        let ok = e.checks.iter().filter(|c| c.pass).count();
        let status = if e.pass() { "pass" } else { "FAIL" };
        s += &format!(
            "{:<width$}  {:>5}  {:>4}/{:<3}  {status}\n",
            e.id,
            tasks,
            ok,
            e.checks.len()
        );
    }
    s += &format!("{} of {} entries pass\n", run.passed(), run.entries.len());
    s
}

fn cmd_corpus(args: &CorpusArgs) -> Result<i32, i32> {
    check_parallel(args.caps.parallel)?;
    let cfg = config(&args.caps);
    let run = run_corpus(&bundled(), &cfg, args.caps.parallel).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    })?;
    if let Some(p) = &args.json {
        write_out(p, &render(&run.to_json()))?;
    }
    if let Some(p) = &args.csv {
        let csv = run.to_csv().map_err(|e| {
            eprintln!("error: {e}");
            1
        })?;
        write_out(p, &csv)?;
    }
    print!("{}", summary(&run));
    Ok(run.code)
}

fn cmd_check(args: &CheckArgs) -> Result<i32, i32> {
    check_parallel(args.parallel)?;
    let suites = checks::all_suites(args.parallel).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    })?;
    let mut code = 0;
    let mut stdout = std::io::stdout().lock();
    for s in &suites {
        let _ = writeln!(stdout, "{s}");
        if !s.pass() {
            code = worst(code, 2);
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match &cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Corpus(a) => cmd_corpus(a),
        Command::Check(a) => cmd_check(a),
    };
    let code = res.unwrap_or_else(|c| c);
    ExitCode::from(code as u8)
}
