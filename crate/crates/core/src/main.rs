use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lspin::corpus::{corpus, CorpusCase, Variant};
use lspin::dsl::{evaluate, parse_session, NumericOptions};
use lspin::tables::{diff, regenerate, Table};
use lspin::verify::{run, Check};

#[derive(Parser)]
#[command(name = "lspin", version, about = "Symbolic spinor L-factors for GSp(4) with split Bessel models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the queries in a `.lspin` session file.
    Eval {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Cross-check factor identities numerically: `--numeric q=3 seed=42`.
        #[arg(long, num_args = 0..=2, value_name = "KEY=VALUE")]
        numeric: Option<Vec<String>>,
    },
    /// Regenerate a table (sreg, total or zeta) from the engines.
    Table {
        which: Table,
        /// Compare with the embedded snapshots; exit 1 on mismatch.
        #[arg(long)]
        diff: bool,
    },
    /// Run verification checks over the corpus.
    Verify {
        /// A check name, or `all`.
        #[arg(default_value = "all")]
        check: String,
        /// Restrict to `TAG` or `TAG:variant`.
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { file, json, numeric } => eval(&file, json, numeric.as_deref()),
        Command::Table { which, diff } => table(which, diff),
        Command::Verify { check, case, json, jobs } => verify(&check, case.as_deref(), json, jobs),
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("lspin: {msg}");
    ExitCode::from(2)
}

fn parse_numeric(args: &[String]) -> Result<NumericOptions, String> {
    let mut opts = NumericOptions { q: 3, seed: 0 };
    for a in args {
        let (k, v) = a.split_once('=').ok_or_else(|| format!("expected KEY=VALUE, got `{a}`"))?;
        match k {
            "q" => opts.q = v.parse().map_err(|_| format!("bad q `{v}`"))?,
            "seed" => opts.seed = v.parse().map_err(|_| format!("bad seed `{v}`"))?,
            _ => return Err(format!("unknown numeric option `{k}`")),
        }
    }
    if opts.q < 2 {
        return Err("q must be at least 2".into());
    }
    Ok(opts)
}

fn eval(file: &Path, json: bool, numeric: Option<&[String]>) -> ExitCode {
    let numeric = match numeric.map(parse_numeric).transpose() {
        Ok(n) => n,
        Err(e) => return fail(e),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", file.display())),
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => return fail(format!("{}:{e}", file.display())),
    };
    let report = evaluate(&session, numeric);
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn table(which: Table, check: bool) -> ExitCode {
    let rows = match regenerate(which) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    for r in &rows {
        println!("== {}", r.id);
        print!("{}", r.text);
    }
    if !check {
        return ExitCode::SUCCESS;
    }
    let mismatches = diff(which, &rows);
    for m in &mismatches {
        eprintln!("SnapshotMismatch {m}");
    }
    if mismatches.is_empty() {
        eprintln!("{} rows match the snapshots", rows.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn verify(check: &str, case: Option<&str>, json: bool, jobs: usize) -> ExitCode {
    let checks: Vec<Check> = if check == "all" {
        Check::ALL.to_vec()
    } else {
        match check.parse() {
            Ok(c) => vec![c],
            Err(e) => return fail(e),
        }
    };
    let cases = match load_corpus() {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let cases: Vec<CorpusCase> = match case {
        Some(f) => cases.into_iter().filter(|c| c.matches(f)).collect(),
        None => cases,
    };
    if cases.is_empty() {
        return fail(format!("no corpus case matches `{}`", case.unwrap_or("")));
    }
    let reports = match run(&checks, &cases, jobs) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if json {
        let doc = serde_json::json!({ "schema": 1, "reports": reports, "failed": failed });
        println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
    } else {
        for r in &reports {
            println!("{}", r.summary());
        }
        println!("{} reports, {} failed", reports.len(), failed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// The embedded corpus, plus every representation declared in the `.lspin`
/// files of `$LSPIN_CORPUS_DIR` (case id `file:name`).
fn load_corpus() -> Result<Vec<CorpusCase>, String> {
    let mut cases = corpus().map_err(|e| e.to_string())?;
    let Some(dir) = std::env::var_os("LSPIN_CORPUS_DIR") else {
        return Ok(cases);
    };
    let dir = PathBuf::from(dir);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "lspin"))
        .collect();
    files.sort();
    for f in files {
        let text = std::fs::read_to_string(&f).map_err(|e| format!("{}: {e}", f.display()))?;
        let session = parse_session(&text).map_err(|e| format!("{}:{e}", f.display()))?;
        let stem = f.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        for r in &session.reprs {
            let spec = session.repr(&r.name).expect("declared representation").clone();
            cases.push(CorpusCase {
                id: format!("{stem}:{}", r.name),
                variant: Variant::GenericPosition,
                spec,
                snapshots: vec![],
            });
        }
    }
    Ok(cases)
}
