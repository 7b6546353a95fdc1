//! Command-line front end: function evaluation, minimization, scans,
//! certificate verification and the conjecture scanner.
//!
//! [`run`] maps a parsed [`Cli`] to an exit code: 0 on success, 1 when a
//! check fails, 2 on invalid arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gamma_extremes::certificates::{self, Compare, Verification};
use gamma_extremes::gamma_prob::{self, GammaParams, Kappa};
use gamma_extremes::iddist::{self, format_sig12, Axis, Family, Spacing};
use gamma_extremes::optimize::{self, Boundary, OptimizeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Reference values for the κ ≠ 1 comparison table, in row order.
const COUNTEREXAMPLE_VALUES: [f64; 6] = [0.3834005, 0.3829249, 0.3819693, 0.9502129, 0.9544997, 0.9585112];
const COUNTEREXAMPLE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "gamma-extremes", version, about = "Extreme-value probabilities of Gamma laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate h, t or the κ-band probability at one point.
    Eval(EvalArgs),
    /// Locate inf_α h_κ(α).
    Minimize(MinimizeArgs),
    /// Tabulate h_κ over a range of α as CSV.
    Scan(ScanArgs),
    /// Rebuild and check the positivity certificates.
    Verify(VerifyArgs),
    /// Reproduce the κ = 1/2 and κ = 2 comparison with the normal law.
    Counterexamples,
    /// Scan infinitely divisible families for the one-sigma band inequality.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    H,
    T,
    Band,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
}

#[derive(Debug, Args)]
pub struct MinimizeArgs {
    #[arg(long)]
    pub kappa: f64,
    #[arg(long, default_value_t = optimize::DEFAULT_TOLERANCE)]
    pub tol: f64,
}

/// `lo:hi` with `0 < lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got '{s}'"))?;
        let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if !(lo > 0.0 && lo < hi && hi.is_finite()) {
            return Err(format!("need 0 < lo < hi, got {lo}:{hi}"));
        }
        Ok(Range { lo, hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridSpacing {
    Log,
    Linear,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub kappa: f64,
    #[arg(long, default_value = "0.0001:1000000")]
    pub range: Range,
    #[arg(long, default_value_t = 400)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = GridSpacing::Log)]
    pub spacing: GridSpacing,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run all six verifications (the default when no names are given).
    #[arg(long)]
    pub all: bool,
    /// Subset: small-alpha, chain-plus, chain-minus, case2-j, case1, scale-factors.
    pub certificates: Vec<Verification>,
    /// Compare every reference coefficient instead of spot checks.
    #[arg(long)]
    pub full_compare: bool,
    /// Write `name=...;verdict=...;detail=...` records here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// One family; all families when omitted.
    #[arg(long)]
    pub family: Option<Family>,
    /// Override the first parameter's range.
    #[arg(long)]
    pub range: Option<Range>,
    /// Override the number of points on the first parameter axis.
    #[arg(long)]
    pub n: Option<usize>,
    /// Write the CSV table here (single family only).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` and runs the command; usage errors print to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(&cli.command, out) {
            Ok(code) => code,
            Err(Failure::Usage(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                EXIT_USAGE
            }
            Err(Failure::Check(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                EXIT_CHECK_FAILED
            }
        },
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

/// Why a command did not complete.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(format!("i/o: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_failed(msg: impl std::fmt::Display) -> Failure {
    Failure::Check(msg.to_string())
}

fn kappa_arg(value: f64) -> Result<Kappa, Failure> {
    Kappa::new(value).map_err(|e| usage(format!("--kappa: {e}")))
}

fn positive_arg(name: &str, value: f64) -> Result<f64, Failure> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(usage(format!("--{name} must be positive and finite, got {value}")))
    }
}

/// Executes one command. `Ok` carries the exit code; failed checks that
/// still produce a report return `Ok(EXIT_CHECK_FAILED)`.
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Eval(a) => eval(a, out),
        Command::Minimize(a) => minimize(a, out),
        Command::Scan(a) => scan(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Counterexamples => counterexamples(out),
        Command::Conjecture(a) => conjecture(a, out),
    }
}

fn eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let alpha = positive_arg("alpha", a.alpha)?;
    let beta = positive_arg("beta", a.beta)?;
    let need_kappa = || a.kappa.ok_or_else(|| usage("--kappa is required for h and band")).and_then(kappa_arg);
    let (label, value) = match a.function {
        Function::H => {
            let k = need_kappa()?;
            (format!("h(kappa={}, alpha={alpha})", k.value()), gamma_prob::h(k, alpha))
        }
        Function::T => (format!("t(alpha={alpha})"), gamma_prob::t(alpha)),
        Function::Band => {
            let k = need_kappa()?;
            let params = GammaParams::new(alpha, beta).map_err(|e| usage(e.to_string()))?;
            (
                format!("band(kappa={}, alpha={alpha}, beta={beta})", k.value()),
                gamma_prob::band(&params, k),
            )
        }
    };
    let value = value.map_err(check_failed)?;
    writeln!(out, "{label} = {}", format_sig12(value.value()))?;
    Ok(EXIT_OK)
}

fn minimize(a: &MinimizeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = kappa_arg(a.kappa)?;
    let tol = positive_arg("tol", a.tol)?;
    match optimize::min_h(k, tol) {
        Ok(r) => {
            writeln!(
                out,
                "kappa={} argmin={} min={} evaluations={} converged={}",
                k.value(),
                format_sig12(r.argmin),
                format_sig12(r.min_value),
                r.evaluations,
                r.converged
            )?;
            Ok(if r.converged { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Err(OptimizeError::NoInteriorMinimum {
            boundary,
            abscissa,
            value,
        }) => {
            let (lo, hi) = optimize::DEFAULT_ALPHA_RANGE;
            let limit = match boundary {
                Boundary::Upper if k == Kappa::ONE => "infimum 1/2 approached as alpha -> infinity",
                Boundary::Upper if k.value() < 1.0 => "infimum 0 approached as alpha -> infinity",
                Boundary::Upper => "decreasing up to the upper end of the search range",
                Boundary::Lower => "minimum at the lower end of the search range",
            };
            writeln!(
                out,
                "kappa={} no interior minimum on [{lo}, {hi}]: {limit}; h at alpha={} is {}",
                k.value(),
                format_sig12(abscissa),
                format_sig12(value)
            )?;
            Ok(EXIT_OK)
        }
        Err(OptimizeError::InvalidInput(msg)) => Err(usage(msg)),
        Err(e) => Err(check_failed(e)),
    }
}

/// `alpha,value` CSV, 12 significant digits, newline-terminated rows.
pub fn scan_csv(kappa: Kappa, range: Range, n: usize, spacing: GridSpacing) -> Result<String, Failure> {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    let rows: Vec<(f64, f64)> = match spacing {
        GridSpacing::Log => optimize::scan(kappa, range.lo, range.hi, n)
            .map_err(check_failed)?
            .into_iter()
            .map(|r| (r.alpha, r.value))
            .collect(),
        GridSpacing::Linear => optimize::linspace(range.lo, range.hi, n)
            .into_iter()
            .map(|alpha| gamma_prob::h(kappa, alpha).map(|v| (alpha, v.value())))
            .collect::<Result<_, _>>()
            .map_err(check_failed)?,
    };
    let mut s = String::from("alpha,value\n");
    for (alpha, value) in rows {
        s.push_str(&format!("{},{}\n", format_sig12(alpha), format_sig12(value)));
    }
    Ok(s)
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| check_failed(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn scan(a: &ScanArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = kappa_arg(a.kappa)?;
    let csv = scan_csv(k, a.range, a.n, a.spacing)?;
    emit(&csv, a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let selection: Vec<Verification> = if a.all || a.certificates.is_empty() {
        Verification::ALL.to_vec()
    } else {
        a.certificates.clone()
    };
    let compare = if a.full_compare { Compare::Full } else { Compare::Spot };
    let entries = certificates::run_suite(&selection, compare);
    let failed = entries.iter().filter(|(_, r)| r.is_err()).count();
    out.write_all(certificates::render_text(&entries, false).as_bytes())?;
    let records = certificates::render_records(&entries);
    match &a.out {
        Some(_) => emit(&records, a.out.as_ref(), out)?,
        None => {
            writeln!(out)?;
            out.write_all(records.as_bytes())?;
        }
    }
    writeln!(out, "{} of {} verifications passed", entries.len() - failed, entries.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn counterexamples(out: &mut dyn Write) -> Result<i32, Failure> {
    let rows = gamma_prob::kappa_counterexamples().map_err(check_failed)?;
    writeln!(out, "{:<14} {:>5} {:>16} {:>12} {:>6}", "law", "kappa", "band", "reference", "match")?;
    let mut ok = true;
    for (row, reference) in rows.iter().zip(COUNTEREXAMPLE_VALUES) {
        let law = match row.alpha {
            Some(a) => format!("Gamma({a}, 1)"),
            None => "Normal(0, 1)".to_string(),
        };
        let matched = (row.value.value() - reference).abs() <= COUNTEREXAMPLE_TOLERANCE;
        ok &= matched;
        writeln!(
            out,
            "{law:<14} {:>5} {:>16} {reference:>12} {:>6}",
            row.kappa,
            format_sig12(row.value.value()),
            if matched { "yes" } else { "NO" }
        )?;
    }
    for triple in rows.chunks(3) {
        let v: Vec<f64> = triple.iter().map(|r| r.value.value()).collect();
        let straddles = (v[0] > v[1] && v[1] > v[2]) || (v[0] < v[1] && v[1] < v[2]);
        ok &= straddles;
        writeln!(
            out,
            "kappa={}: Gamma bands {} the normal band",
            triple[0].kappa,
            if straddles { "straddle" } else { "do NOT straddle" }
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn conjecture(a: &ConjectureArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let families: Vec<Family> = match a.family {
        Some(f) => vec![f],
        None => Family::ALL.to_vec(),
    };
    if a.out.is_some() && families.len() != 1 {
        return Err(usage("--out needs a single --family"));
    }
    let mut violations = false;
    for family in families {
        let mut grid = family.default_grid();
        if let Some(first) = grid.axes.first_mut() {
            override_axis(first, a.range, a.n)?;
        } else if a.range.is_some() || a.n.is_some() {
            return Err(usage(format!("family {family} has no parameters")));
        }
        let report = iddist::conjecture_scan(family, &grid, None).map_err(check_failed)?;
        violations |= !report.violations.is_empty();
        if let Some(path) = &a.out {
            emit(&report.to_csv(), Some(path), out)?;
        }
        out.write_all(report.to_record().as_bytes())?;
    }
    Ok(if violations { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn override_axis(axis: &mut Axis, range: Option<Range>, n: Option<usize>) -> Result<(), Failure> {
    if let Some(r) = range {
        if axis.spacing == Spacing::Linear && axis.name == "p" && r.hi >= 1.0 {
            return Err(usage("p range must lie in (0, 1)"));
        }
        axis.lo = r.lo;
        axis.hi = r.hi;
    }
    if let Some(n) = n {
        if n < 2 {
            return Err(usage(format!("--n must be at least 2, got {n}")));
        }
        axis.n = n;
    }
    Ok(())
}
