//! Infinitely divisible families and the one-standard-deviation band scan.
//!
//! For a law `L` the band probability is `P{|L − E L| ≤ √Var L}`. The scan
//! compares it with `P{|Z| ≤ 1}` over a parameter grid. Results are numerical
//! evidence about an open question and carry that label.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use thiserror::Error;

use crate::gamma_prob::{self, GammaProbError};
use crate::optimize::{linspace, log_grid};
use crate::specfun::{self, Probability, SpecFunError};

/// Truncation threshold for the compound Poisson series tail.
pub const SERIES_TAIL: f64 = 1e-12;
/// Hard cap on compound Poisson series terms.
pub const SERIES_MAX_TERMS: usize = 1_000_000;
/// Slack below the threshold before a grid value counts as a violation.
pub const VIOLATION_SLACK: f64 = 1e-9;

pub const EVIDENCE_NOTE: &str = "numerical evidence only; a grid scan neither proves nor refutes the inequality";
pub const NEGATIVE_BINOMIAL_CONVENTION: &str = "negative binomial counts failures before the r-th success";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdDistError {
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("compound Poisson series did not reach tail {SERIES_TAIL:e} within {terms} terms (tail {tail:e})")]
    SeriesNotConverged { terms: usize, tail: f64 },
    #[error("empty parameter grid")]
    EmptyGrid,
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    GammaProb(#[from] GammaProbError),
}

/// A member of one of the supported infinitely divisible families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionSpec {
    Poisson { lambda: f64 },
    /// Failures before the `r`-th success, success probability `p`.
    NegativeBinomial { r: f64, p: f64 },
    InverseGaussian { mu: f64, shape: f64 },
    /// `Σ_{i≤N} E_i` with `N ~ Poisson(rate)` and `E_i ~ Exp(mean jump_scale)`.
    CompoundPoissonExp { rate: f64, jump_scale: f64 },
    GammaDist { alpha: f64, beta: f64 },
    NormalBaseline,
}

fn positive(name: &'static str, value: f64) -> Result<f64, IdDistError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(IdDistError::InvalidParameter { name, value })
    }
}

impl DistributionSpec {
    pub fn validate(&self) -> Result<(), IdDistError> {
        match *self {
            DistributionSpec::Poisson { lambda } => positive("lambda", lambda).map(drop),
            DistributionSpec::NegativeBinomial { r, p } => {
                positive("r", r)?;
                if p > 0.0 && p < 1.0 {
                    Ok(())
                } else {
                    Err(IdDistError::InvalidParameter { name: "p", value: p })
                }
            }
            DistributionSpec::InverseGaussian { mu, shape } => {
                positive("mu", mu)?;
                positive("shape", shape).map(drop)
            }
            DistributionSpec::CompoundPoissonExp { rate, jump_scale } => {
                positive("rate", rate)?;
                positive("jump_scale", jump_scale).map(drop)
            }
            DistributionSpec::GammaDist { alpha, beta } => {
                positive("alpha", alpha)?;
                positive("beta", beta).map(drop)
            }
            DistributionSpec::NormalBaseline => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
}

/// Closed-form mean and variance.
///
/// ```
/// use gamma_extremes::iddist::{moments, DistributionSpec};
///
/// let m = moments(&DistributionSpec::GammaDist { alpha: 2.0, beta: 3.0 }).unwrap();
/// assert_eq!((m.mean, m.variance), (6.0, 18.0));
/// ```
pub fn moments(spec: &DistributionSpec) -> Result<Moments, IdDistError> {
    spec.validate()?;
    let (mean, variance) = match *spec {
        DistributionSpec::Poisson { lambda } => (lambda, lambda),
        DistributionSpec::NegativeBinomial { r, p } => (r * (1.0 - p) / p, r * (1.0 - p) / (p * p)),
        DistributionSpec::InverseGaussian { mu, shape } => (mu, mu.powi(3) / shape),
        DistributionSpec::CompoundPoissonExp { rate, jump_scale } => {
            (rate * jump_scale, 2.0 * rate * jump_scale * jump_scale)
        }
        DistributionSpec::GammaDist { alpha, beta } => (alpha * beta, alpha * beta * beta),
        DistributionSpec::NormalBaseline => (0.0, 1.0),
    };
    Ok(Moments { mean, variance })
}

/// Integers `k ≥ 0` with `|k − mean| ≤ sd`, as an inclusive range.
fn integer_band(mean: f64, sd: f64) -> Option<(u64, u64)> {
    let lo = (mean - sd).ceil().max(0.0);
    let hi = (mean + sd).floor();
    (hi >= lo).then_some((lo as u64, hi as u64))
}

/// Sums `pmf(lo..=hi)` from `ln pmf(lo)` and the ratio `pmf(k+1)/pmf(k)`.
fn pmf_sum(lo: u64, hi: u64, ln_first: f64, ratio: impl Fn(f64) -> f64) -> f64 {
    let mut term = ln_first.exp();
    let mut sum = term;
    for k in lo..hi {
        term *= ratio(k as f64);
        sum += term;
    }
    sum
}

fn poisson_band(lambda: f64) -> Result<f64, IdDistError> {
    let Some((lo, hi)) = integer_band(lambda, lambda.sqrt()) else {
        return Ok(0.0);
    };
    let k = lo as f64;
    let ln_first = k * lambda.ln() - lambda - specfun::ln_gamma(k + 1.0)?;
    Ok(pmf_sum(lo, hi, ln_first, |k| lambda / (k + 1.0)))
}

fn negative_binomial_band(r: f64, p: f64, m: Moments) -> Result<f64, IdDistError> {
    let Some((lo, hi)) = integer_band(m.mean, m.variance.sqrt()) else {
        return Ok(0.0);
    };
    let k = lo as f64;
    let q = 1.0 - p;
    let ln_first =
        specfun::ln_gamma(k + r)? - specfun::ln_gamma(r)? - specfun::ln_gamma(k + 1.0)? + r * p.ln() + k * q.ln();
    Ok(pmf_sum(lo, hi, ln_first, |k| (k + r) / (k + 1.0) * q))
}

/// `F(x) = Φ(√(λ/x)(x/μ − 1)) + e^{2λ/μ} Φ(−√(λ/x)(x/μ + 1))`.
fn inverse_gaussian_cdf(x: f64, mu: f64, shape: f64) -> Result<f64, IdDistError> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let s = (shape / x).sqrt();
    let first = specfun::std_normal_cdf(s * (x / mu - 1.0))?.value();
    let second = (2.0 * shape / mu + specfun::ln_std_normal_cdf(-s * (x / mu + 1.0))?).exp();
    Ok(first + second)
}

/// Compound Poisson series with its truncation data.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundSeries {
    pub value: f64,
    /// Number of jump counts `n ≥ 1` summed.
    pub terms: usize,
    /// `P{N > terms}`, the Poisson mass left out.
    pub tail_bound: f64,
    /// Running totals after the atom and after each term.
    pub partial_sums: Vec<f64>,
}

/// `e^{−λ}[1{0 in band} + Σ_{n≥1} λⁿ/n! (P(n, hi/θ) − P(n, lo/θ))]`, stopped once
/// the Poisson tail drops below [`SERIES_TAIL`].
pub fn compound_poisson_series(rate: f64, jump_scale: f64) -> Result<CompoundSeries, IdDistError> {
    DistributionSpec::CompoundPoissonExp { rate, jump_scale }.validate()?;
    let mean = rate * jump_scale;
    let sd = jump_scale * (2.0 * rate).sqrt();
    let lo = ((mean - sd) / jump_scale).max(0.0);
    let hi = (mean + sd) / jump_scale;
    let atom_inside = mean - sd <= 0.0;
    let mut value = if atom_inside { (-rate).exp() } else { 0.0 };
    let mut partial_sums = vec![value];
    let ln_rate = rate.ln();
    let mut n = 0usize;
    loop {
        n += 1;
        let nf = n as f64;
        let ln_weight = nf * ln_rate - rate - specfun::ln_gamma(nf + 1.0)?;
        if ln_weight > -745.0 {
            let upper = specfun::reg_lower_gamma(nf, hi)?.value();
            let lower = if lo > 0.0 { specfun::reg_lower_gamma(nf, lo)?.value() } else { 0.0 };
            value += ln_weight.exp() * (upper - lower).max(0.0);
        }
        partial_sums.push(value);
        if nf > rate {
            let tail = specfun::reg_lower_gamma(nf + 1.0, rate)?.value();
            if tail < SERIES_TAIL {
                return Ok(CompoundSeries {
                    value,
                    terms: n,
                    tail_bound: tail,
                    partial_sums,
                });
            }
            if n >= SERIES_MAX_TERMS {
                return Err(IdDistError::SeriesNotConverged { terms: n, tail });
            }
        }
    }
}

/// `P{|L − E L| ≤ √Var L}`.
///
/// ```
/// use gamma_extremes::iddist::{band_prob, DistributionSpec};
///
/// // Poisson(1): P{0 ≤ X ≤ 2} = 2.5/e
/// let v = band_prob(&DistributionSpec::Poisson { lambda: 1.0 }).unwrap().value();
/// assert!((v - 2.5 * (-1.0f64).exp()).abs() < 1e-12);
/// ```
pub fn band_prob(spec: &DistributionSpec) -> Result<Probability, IdDistError> {
    let m = moments(spec)?;
    let sd = m.variance.sqrt();
    let value = match *spec {
        DistributionSpec::Poisson { lambda } => poisson_band(lambda)?,
        DistributionSpec::NegativeBinomial { r, p } => negative_binomial_band(r, p, m)?,
        DistributionSpec::InverseGaussian { mu, shape } => {
            inverse_gaussian_cdf(m.mean + sd, mu, shape)? - inverse_gaussian_cdf(m.mean - sd, mu, shape)?
        }
        DistributionSpec::CompoundPoissonExp { rate, jump_scale } => compound_poisson_series(rate, jump_scale)?.value,
        // scale invariance: the band does not depend on β
        DistributionSpec::GammaDist { alpha, .. } => return Ok(gamma_prob::t(alpha)?),
        DistributionSpec::NormalBaseline => return Ok(specfun::std_normal_band(1.0)?),
    };
    Ok(Probability::new(value)?)
}

/// The scannable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Poisson,
    NegativeBinomial,
    InverseGaussian,
    CompoundPoissonExp,
    Gamma,
    Normal,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Poisson,
        Family::NegativeBinomial,
        Family::InverseGaussian,
        Family::CompoundPoissonExp,
        Family::Gamma,
        Family::Normal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Poisson => "poisson",
            Family::NegativeBinomial => "negative-binomial",
            Family::InverseGaussian => "inverse-gaussian",
            Family::CompoundPoissonExp => "compound-poisson-exp",
            Family::Gamma => "gamma",
            Family::Normal => "normal",
        }
    }

    /// Default grid: 200 log-spaced points for one parameter, 50×50 for two.
    pub fn default_grid(self) -> Grid {
        let axes = match self {
            Family::Poisson => vec![Axis::log("lambda", 1e-2, 1e3, 200)],
            Family::NegativeBinomial => vec![Axis::log("r", 0.05, 50.0, 50), Axis::linear("p", 0.02, 0.98, 50)],
            Family::InverseGaussian => vec![Axis::log("mu", 0.1, 10.0, 50), Axis::log("shape", 1e-2, 1e3, 50)],
            Family::CompoundPoissonExp => {
                vec![Axis::log("rate", 1e-2, 1e2, 50), Axis::log("jump_scale", 0.1, 10.0, 50)]
            }
            Family::Gamma => vec![Axis::log("alpha", 1e-3, 1e5, 200)],
            Family::Normal => Vec::new(),
        };
        Grid { axes }
    }

    /// Builds the distribution at one grid point.
    pub fn spec(self, params: &[f64]) -> DistributionSpec {
        match self {
            Family::Poisson => DistributionSpec::Poisson { lambda: params[0] },
            Family::NegativeBinomial => DistributionSpec::NegativeBinomial {
                r: params[0],
                p: params[1],
            },
            Family::InverseGaussian => DistributionSpec::InverseGaussian {
                mu: params[0],
                shape: params[1],
            },
            Family::CompoundPoissonExp => DistributionSpec::CompoundPoissonExp {
                rate: params[0],
                jump_scale: params[1],
            },
            Family::Gamma => DistributionSpec::GammaDist {
                alpha: params[0],
                beta: 1.0,
            },
            Family::Normal => DistributionSpec::NormalBaseline,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family '{s}', expected one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub spacing: Spacing,
}

impl Axis {
    pub fn log(name: &'static str, lo: f64, hi: f64, n: usize) -> Axis {
        Axis {
            name,
            lo,
            hi,
            n,
            spacing: Spacing::Log,
        }
    }

    pub fn linear(name: &'static str, lo: f64, hi: f64, n: usize) -> Axis {
        Axis {
            name,
            lo,
            hi,
            n,
            spacing: Spacing::Linear,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        match self.spacing {
            Spacing::Linear => linspace(self.lo, self.hi, self.n),
            Spacing::Log => log_grid(self.lo, self.hi, self.n),
        }
    }
}

/// Cartesian product of up to two axes; no axes means a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub axes: Vec<Axis>,
}

impl Grid {
    /// Points in row-major order (last axis fastest).
    pub fn points(&self) -> Vec<Vec<f64>> {
        self.axes.iter().fold(vec![Vec::new()], |acc, axis| {
            let values = axis.points();
            acc.into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect()
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.axes.iter().map(|a| a.name).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub family: Family,
    pub parameter_names: Vec<&'static str>,
    pub grid: Vec<Vec<f64>>,
    pub values: Vec<f64>,
    pub threshold: Probability,
    pub min_band: Probability,
    pub argmin_params: Vec<f64>,
    /// Grid points with band below `threshold − VIOLATION_SLACK`.
    pub violations: Vec<(Vec<f64>, f64)>,
}

impl ScanReport {
    /// CSV with one column per parameter and a `value` column, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for name in &self.parameter_names {
            let _ = write!(s, "{name},");
        }
        s.push_str("value\n");
        for (params, v) in self.grid.iter().zip(&self.values) {
            for p in params {
                let _ = write!(s, "{},", format_sig12(*p));
            }
            let _ = writeln!(s, "{}", format_sig12(*v));
        }
        s
    }

    /// One `name=...;verdict=...;detail=...` record.
    pub fn to_record(&self) -> String {
        let verdict = if self.violations.is_empty() { "no_violation" } else { "violation" };
        let argmin: Vec<String> = self
            .parameter_names
            .iter()
            .zip(&self.argmin_params)
            .map(|(n, v)| format!("{n}={}", format_sig12(*v)))
            .collect();
        let mut detail = format!(
            "min_band={},argmin=[{}],violations={}/{},threshold={}",
            format_sig12(self.min_band.value()),
            argmin.join(" "),
            self.violations.len(),
            self.grid.len(),
            format_sig12(self.threshold.value()),
        );
        if self.family == Family::NegativeBinomial {
            let _ = write!(detail, ",{NEGATIVE_BINOMIAL_CONVENTION}");
        }
        let _ = write!(detail, ",{EVIDENCE_NOTE}");
        format!("name={};verdict={verdict};detail={}\n", self.family, detail.replace(';', ","))
    }
}

/// Decimal notation with 12 significant digits and no exponent.
///
/// ```
/// use gamma_extremes::iddist::format_sig12;
///
/// assert_eq!(format_sig12(0.682689492137086), "0.682689492137");
/// assert_eq!(format_sig12(1000.0), "1000.00000000");
/// ```
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    let digits = s.chars().filter(|c| c.is_ascii_digit()).collect::<String>();
    let significant = digits.trim_start_matches('0').len();
    if significant > 12 && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

/// Evaluates the band over `grid` in parallel and collects violations in grid order.
///
/// `threshold` defaults to `P{|Z| ≤ 1}`.
pub fn conjecture_scan(
    family: Family,
    grid: &Grid,
    threshold: Option<Probability>,
) -> Result<ScanReport, IdDistError> {
    let points = grid.points();
    if points.is_empty() || grid.axes.iter().any(|a| a.n == 0) {
        return Err(IdDistError::EmptyGrid);
    }
    let threshold = match threshold {
        Some(t) => t,
        None => specfun::std_normal_band(1.0)?,
    };
    let values: Vec<f64> = points
        .par_iter()
        .map(|p| band_prob(&family.spec(p)).map(Probability::value))
        .collect::<Result<_, _>>()?;
    let (imin, &vmin) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is nonempty");
    let violations = points
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v < threshold.value() - VIOLATION_SLACK)
        .map(|(p, &v)| (p.clone(), v))
        .collect();
    Ok(ScanReport {
        family,
        parameter_names: grid.names(),
        argmin_params: points[imin].clone(),
        grid: points,
        values,
        threshold,
        min_band: Probability::new(vmin)?,
        violations,
    })
}
