//! Command-line front end: list and run identity checks, evaluate operator
//! expressions, manage the Macdonald cache.
//!
//! Exit codes: 0 success, 1 check failures, 2 usage error or unknown check,
//! 3 corrupted cache, 4 any other error.

use crate::error::{Error, Result};
use crate::identities::{render_json, render_list_json, render_list_text, render_text, run_all, select, Bounds};
use crate::macdonald::{max_degree, MacCache};
use crate::operators::parse_applied;
use crate::symfunc::{render_basis, Basis};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CACHE: i32 = 3;
pub const EXIT_ERROR: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "qtsym", version, about = "Exact symmetric functions over Q(q,t) and identity verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the registered checks.
    List {
        /// Glob matched against check names and tags.
        #[arg(long, env = "QTSYM_FILTER")]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text, env = "QTSYM_FORMAT")]
        format: Format,
    },
    /// Run checks and print a report.
    Run(RunArgs),
    /// Apply an operator word to a symmetric function and print the result.
    Compute {
        /// For example `theta(e2) delta(e3) e3` or `H[2,1]`.
        expr: String,
        #[arg(long, value_enum, default_value_t = BasisArg::S, env = "QTSYM_BASIS")]
        basis: BasisArg,
        /// Largest degree the computation may reach.
        #[arg(short = 'N', long = "bound", default_value_t = max_degree(), env = "QTSYM_BOUND")]
        bound: u32,
    },
    /// Precompute modified Macdonald polynomials into a cache directory.
    Cache {
        #[arg(long, env = "QTSYM_CACHE_DIR")]
        cache_dir: PathBuf,
        /// Highest degree to compute.
        #[arg(short = 'N', long = "bound", default_value_t = 6, env = "QTSYM_BOUND")]
        bound: u32,
    },
}

#[derive(Args, Debug, Clone)]
#[group(skip)]
#[command(group(ArgGroup::new("selection").required(true).args(["all", "check"])))]
pub struct RunArgs {
    /// Run the whole catalog.
    #[arg(long, env = "QTSYM_ALL")]
    pub all: bool,
    /// Check name, or a glob over names and tags.
    #[arg(long, env = "QTSYM_CHECK")]
    pub check: Option<String>,
    /// Bound on partition sizes and integer parameters.
    #[arg(short = 'N', long = "bound", default_value_t = 4, env = "QTSYM_BOUND")]
    pub bound: u32,
    /// Bound on the parameters of the q-lemmas.
    #[arg(long, default_value_t = 8, env = "QTSYM_QBOUND")]
    pub qbound: u32,
    /// Directory used to load and store modified Macdonald polynomials.
    #[arg(long, env = "QTSYM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, env = "QTSYM_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text, env = "QTSYM_FORMAT")]
    pub format: Format,
    /// Skip the remaining checks after the first failure.
    #[arg(long, env = "QTSYM_FAIL_FAST")]
    pub fail_fast: bool,
    /// Report all durations as zero so that reports are reproducible byte for byte.
    #[arg(long, env = "QTSYM_NO_TIMINGS")]
    pub no_timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    E,
    H,
    S,
    M,
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::S => Basis::S,
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownCheck { .. } | Error::Parse(_) | Error::OutOfRange(_) => EXIT_USAGE,
        Error::CacheCorrupt(_) => EXIT_CACHE,
        _ => EXIT_ERROR,
    }
}

/// Prints the catalog.
pub fn cmd_list(filter: Option<&str>, format: Format, out: &mut impl Write) -> Result<i32> {
    let checks = select(filter)?;
    let text = match format {
        Format::Text => render_list_text(&checks),
        Format::Json => render_list_json(&checks) + "\n",
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn has_glob_chars(s: &str) -> bool {
    s.contains(['*', '?', '['])
}

/// Runs the configured checks; the report goes to `out`.
pub fn cmd_run(args: &RunArgs, out: &mut impl Write) -> Result<i32> {
    let filter = if args.all { None } else { args.check.as_deref() };
    if let Some(name) = filter {
        if select(Some(name))?.is_empty() {
            if !has_glob_chars(name) {
                crate::identities::find_check(name)?;
            }
            return Err(Error::UnknownCheck { name: name.to_string(), suggestions: Vec::new() });
        }
    }
    let cache = args.cache_dir.as_ref().map(MacCache::open).transpose()?;
    if let Some(c) = &cache {
        c.warm(0)?;
    }
    let jobs = args
        .jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let bounds = Bounds::new(args.bound, args.qbound);
    let summary = run_all(&bounds, filter, jobs, args.fail_fast)?;
    if let Some(c) = &cache {
        c.persist()?;
    }
    let timings = !args.no_timings;
    let text = match args.format {
        Format::Text => render_text(&summary, timings),
        Format::Json => render_json(&summary, timings) + "\n",
    };
    out.write_all(text.as_bytes())?;
    Ok(if summary.failures == 0 { EXIT_OK } else { EXIT_FAILURES })
}

/// Evaluates `expr` and returns its expansion in `basis`.
pub fn compute(expr: &str, basis: Basis, bound: u32) -> Result<String> {
    let (op, operand) = parse_applied(expr)?;
    let start = operand.degree();
    if start > bound {
        return Err(Error::OutOfRange(format!("operand has degree {start}, above the bound {bound}")));
    }
    if let (Some(shift), true) = (op.degree_shift(), operand.is_homogeneous()) {
        let end = start as i64 + shift as i64;
        if end > bound as i64 {
            return Err(Error::OutOfRange(format!("result has degree {end}, above the bound {bound}")));
        }
    }
    let value = op.apply(&operand)?;
    Ok(render_basis(&value, basis))
}

pub fn cmd_compute(expr: &str, basis: BasisArg, bound: u32, out: &mut impl Write) -> Result<i32> {
    let text = compute(expr, basis.into(), bound)?;
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

pub fn cmd_cache(dir: &PathBuf, bound: u32, out: &mut impl Write) -> Result<i32> {
    let cache = MacCache::open(dir)?;
    let computed = cache.warm(bound)?;
    writeln!(out, "{computed} partitions computed; cache at {} covers degree <= {bound}", dir.display())?;
    Ok(EXIT_OK)
}

/// Parses `args`, dispatches, and returns the process exit code. Errors are
/// reported on `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::List { filter, format } => cmd_list(filter.as_deref(), *format, out),
        Command::Run(args) => cmd_run(args, out),
        Command::Compute { expr, basis, bound } => cmd_compute(expr, *basis, *bound, out),
        Command::Cache { cache_dir, bound } => cmd_cache(cache_dir, *bound, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
