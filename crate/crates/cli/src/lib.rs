//! Command-line front end for `redheffer-core`.
//!
//! Every subcommand produces a [`report::Report`] rendered as CSV or JSON.
//! Exit codes: 0 when every check passed, 1 when the report carries a failed
//! check (a violation was found or a bound is unsatisfied), 2 on usage or
//! domain errors.

pub mod parallel;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use redheffer_core::inequality::{alpha_t, alpha_two, success_bound};
use redheffer_core::qpe::{closed_form_prob, delta, outcome_distribution, success_probability, DEFAULT_MAX_QUBITS};
use redheffer_core::thresholds::{
    certify_inequality_with, corollary_min_with, find_violation, min_induction_gap_with, threshold_row, SolverConfig,
};

use parallel::{par_map, par_scan_min};
use report::{format_float, write_csv, write_json, Record, Report, FULL_PRECISION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "redheffer",
    version,
    about = "Generalized Redheffer inequality and phase-estimation bounds"
)]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Significant digits for floats (17 = shortest round-trip).
    #[arg(long, global = true, default_value_t = FULL_PRECISION,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=17))]
    pub precision: usize,

    /// Worker threads for grid scans and threshold tables.
    #[arg(long, global = true, default_value = "1")]
    pub threads: NonZeroUsize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of n-thresholds alpha_n (numeric), beta_n and gamma_n.
    Thresholds {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
    },
    /// Minimum of the inequality margin over a grid of [0, 1/2].
    Verify {
        #[arg(long, value_parser = positive_float)]
        alpha: f64,
        #[arg(long, default_value_t = 100_001, value_parser = grid_count(2))]
        grid: usize,
    },
    /// Minimum of the induction functional G_{n,alpha} over [0, 1].
    Gscan {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, value_parser = positive_float)]
        alpha: f64,
        #[arg(long, default_value_t = 4097, value_parser = grid_count(2))]
        grid: usize,
    },
    /// Search for a point where the inequality fails.
    Sharpness {
        #[arg(long, value_parser = positive_float)]
        alpha: f64,
    },
    /// Minimum of sin^2(pi t)(1/t^2 + 1/(1-t)^2) over a grid of (0, 1).
    Corollary {
        #[arg(long, default_value_t = 100_001, value_parser = grid_count(1))]
        grid: usize,
    },
    /// Phase-estimation success probability against 8/pi^2.
    Qpe {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=i64::from(DEFAULT_MAX_QUBITS)))]
        qubits: u32,
        #[arg(long, value_parser = unit_phase)]
        phase: f64,
        /// Also write the full outcome distribution as CSV.
        #[arg(long)]
        dist: Option<PathBuf>,
    },
    /// Named constants at full precision.
    Constants,
}

fn parse_float(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("must be finite".into())
    }
}

fn positive_float(s: &str) -> Result<f64, String> {
    let v = parse_float(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err("must be > 0".into())
    }
}

fn unit_phase(s: &str) -> Result<f64, String> {
    let v = parse_float(s)?;
    if (0.0..1.0).contains(&v) {
        Ok(v)
    } else {
        Err("must lie in [0, 1)".into())
    }
}

fn grid_count(min: usize) -> impl Fn(&str) -> Result<usize, String> + Clone + Send + Sync + 'static {
    move |s| {
        let v: usize = s.trim().parse().map_err(|e| format!("{e}"))?;
        if v >= min {
            Ok(v)
        } else {
            Err(format!("must be at least {min}"))
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Domain(redheffer_core::Error),
    Io(io::Error),
}

impl From<redheffer_core::Error> for RunError {
    fn from(e: redheffer_core::Error) -> Self {
        RunError::Domain(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Domain(e) => write!(f, "{e}"),
            RunError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

/// Compute the report for a parsed command. Side outputs (`qpe --dist`)
/// are written here; the report itself is not.
pub fn execute(command: &Command, output: &OutputArgs) -> Result<Report, RunError> {
    let threads = output.threads;
    let report = match *command {
        Command::Thresholds { n_max } => {
            let cfg = SolverConfig::default();
            let ns: Vec<u32> = (2..=n_max).collect();
            let rows = par_map(&ns, threads, |&n| threshold_row(n, &cfg))
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            let records = rows
                .iter()
                .map(|r| {
                    Record::new()
                        .with("n", u64::from(r.n))
                        .with("alpha_n", r.alpha_n)
                        .with("beta_n", r.beta_n)
                        .with("gamma_n", r.gamma_n)
                        .with("alpha_eq_beta", r.alpha_eq_beta)
                })
                .collect();
            Report::rows(records, false)
        }
        Command::Verify { alpha, grid } => {
            let r = certify_inequality_with(alpha, grid, |f, g, range| par_scan_min(f, g, range, threads))?;
            let pass = r.certified();
            Report::single(
                Record::new()
                    .with("alpha", r.alpha)
                    .with("grid", r.grid_count as u64)
                    .with("min_margin", r.min_margin)
                    .with("argmin_x", r.argmin_x)
                    .with("pass", pass),
                !pass,
            )
        }
        Command::Gscan { n, alpha, grid } => {
            let r = min_induction_gap_with(n, alpha, grid, |f, g, range| par_scan_min(f, g, range, threads))?;
            let pass = r.certified();
            Report::single(
                Record::new()
                    .with("n", u64::from(r.n))
                    .with("alpha", r.alpha)
                    .with("min_g", r.min_g)
                    .with("argmin_y", r.argmin_y)
                    .with("pass", pass),
                !pass,
            )
        }
        Command::Sharpness { alpha } => {
            let witness = find_violation(alpha)?;
            Report::single(
                Record::new()
                    .with("alpha", alpha)
                    .with("witness_x", witness.map(|v| v.x))
                    .with("margin_at_witness", witness.map(|v| v.margin)),
                witness.is_some(),
            )
        }
        Command::Corollary { grid } => {
            let r = corollary_min_with(grid, |f, g, range| par_scan_min(f, g, range, threads))?;
            let pass = r.certified();
            Report::single(
                Record::new()
                    .with("min_lhs", r.min_lhs)
                    .with("argmin_theta", r.argmin_theta)
                    .with("pass", pass),
                !pass,
            )
        }
        Command::Qpe {
            qubits,
            phase,
            ref dist,
        } => {
            let r = success_probability(qubits, phase)?;
            if let Some(path) = dist {
                write_distribution(qubits, phase, output.precision, path)?;
            }
            Report::single(
                Record::new()
                    .with("n", u64::from(r.num_qubits))
                    .with("w", r.phase_w)
                    .with("x_lo", r.x_lo)
                    .with("x_hi", r.x_hi)
                    .with("p_lo", r.p_lo)
                    .with("p_hi", r.p_hi)
                    .with("success_prob", r.success_prob)
                    .with("bound", r.bound)
                    .with("satisfied", r.satisfied),
                !r.satisfied,
            )
        }
        Command::Constants => Report::single(
            Record::new()
                .with("alpha_t", alpha_t())
                .with("success_bound", success_bound())
                .with("log2_over_log_21_16", alpha_two())
                .with("pi_over_4", std::f64::consts::FRAC_PI_4),
            false,
        ),
    };
    Ok(report)
}

fn write_distribution(qubits: u32, phase: f64, precision: usize, path: &Path) -> Result<(), RunError> {
    let dist = outcome_distribution(qubits, phase)?;
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "x,delta,p_closed,p_sim,abs_diff")?;
    for (x, &p_sim) in dist.probs.iter().enumerate() {
        let x = x as u64;
        let d = delta(dist.phase_w, qubits, x)?;
        let p_closed = closed_form_prob(qubits, dist.phase_w, x)?;
        writeln!(
            out,
            "{x},{},{},{},{}",
            format_float(d, precision),
            format_float(p_closed, precision),
            format_float(p_sim, precision),
            format_float((p_sim - p_closed).abs(), precision),
        )?;
    }
    out.flush()?;
    Ok(())
}

fn emit(report: &Report, output: &OutputArgs) -> io::Result<()> {
    let render = |w: &mut dyn Write| match output.format {
        Format::Csv => write_csv(report, output.precision, w),
        Format::Json => write_json(report, output.precision, w),
    };
    match &output.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            render(&mut w)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            render(&mut w)?;
            w.flush()
        }
    }
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli.command, &cli.output) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = emit(&report, &cli.output) {
        eprintln!("error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    if report.failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}
