//! One-dimensional minimization of `h_κ` over the shape `α`.
//!
//! The search runs in `x = ln α`. A uniform grid brackets the minimum, then
//! Brent's method (golden section with parabolic steps) polishes it. For
//! `κ ≤ 1` the grid minimum sits on the right edge of the range, which is
//! reported as [`OptimizeError::NoInteriorMinimum`] together with the edge
//! value: the infimum is a limit as `α → ∞`, not an attained minimum.

use rayon::prelude::*;
use thiserror::Error;

use crate::gamma_prob::{self, GammaProbError, Kappa};
use crate::specfun::Probability;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_ALPHA_RANGE: (f64, f64) = (1e-4, 1e6);
pub const DEFAULT_GRID: usize = 200;
pub const MAX_EVALUATIONS: usize = 200;

const GOLDEN: f64 = 0.381_966_011_250_105_1;
const SQRT_EPS: f64 = 1.490_116_119_384_765_6e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptimizeError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no interior minimum: grid minimum {value} sits at the {boundary:?} boundary x = {abscissa}")]
    NoInteriorMinimum {
        boundary: Boundary,
        abscissa: f64,
        value: f64,
    },
    #[error("minimizer exceeded {evaluations} objective evaluations")]
    MaxEvaluations { evaluations: usize },
    #[error(transparent)]
    Objective(#[from] GammaProbError),
}

/// Three abscissae with the objective at `mid` below both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub mid: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Minimizing shape `α` (for [`min_h`]) or abscissa (for [`brent_min`]).
    pub argmin: f64,
    pub min_value: f64,
    /// Bracket in the same coordinate as `argmin`.
    pub bracket: Bracket,
    pub evaluations: usize,
    pub converged: bool,
}

impl OptimizationResult {
    pub fn min_probability(&self) -> Probability {
        Probability::new(self.min_value).expect("objective is a probability")
    }
}

/// Samples `f` on `grid_n` equally spaced points of `[lo, hi]` and brackets
/// the smallest sample.
///
/// Ties go to the leftmost point. If the smallest value is attained at either
/// end of the grid, the minimum is not interior and an error is returned.
pub fn bracket_minimum<F>(mut f: F, lo: f64, hi: f64, grid_n: usize) -> Result<Bracket, OptimizeError>
where
    F: FnMut(f64) -> Result<f64, GammaProbError>,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(OptimizeError::InvalidInput(format!("need lo < hi, got [{lo}, {hi}]")));
    }
    if grid_n < 3 {
        return Err(OptimizeError::InvalidInput(format!("grid needs at least 3 points, got {grid_n}")));
    }
    let xs = linspace(lo, hi, grid_n);
    let values = xs.iter().map(|&x| f(x)).collect::<Result<Vec<_>, _>>()?;
    let (best, &min) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is nonempty");
    let last = grid_n - 1;
    if values[last] == min {
        return Err(OptimizeError::NoInteriorMinimum {
            boundary: Boundary::Upper,
            abscissa: xs[last],
            value: min,
        });
    }
    if best == 0 {
        return Err(OptimizeError::NoInteriorMinimum {
            boundary: Boundary::Lower,
            abscissa: xs[0],
            value: min,
        });
    }
    // widen across flat stretches so the middle value is strictly smallest
    let hi_idx = (best + 1..=last)
        .find(|&j| values[j] > min)
        .expect("last value exceeds the minimum");
    Ok(Bracket {
        lo: xs[best - 1],
        mid: xs[best],
        hi: xs[hi_idx],
    })
}

/// Brent's minimizer on a bracket.
///
/// Stops when the abscissa is pinned to `tol + √ε·|x|`; finer resolution
/// is not meaningful for an objective known only to machine precision.
pub fn brent_min<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<OptimizationResult, OptimizeError>
where
    F: FnMut(f64) -> Result<f64, GammaProbError>,
{
    let Bracket { lo, mid, hi } = bracket;
    if !(lo < mid && mid < hi) {
        return Err(OptimizeError::InvalidInput(format!(
            "bracket must satisfy lo < mid < hi, got ({lo}, {mid}, {hi})"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(OptimizeError::InvalidInput(format!("tolerance must be > 0, got {tol}")));
    }

    let (mut a, mut b) = (lo, hi);
    let mut x = mid;
    let mut fx = f(x)?;
    let mut evaluations = 1;
    let (mut w, mut v) = (x, x);
    let (mut fw, mut fv) = (fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;

    loop {
        let xm = 0.5 * (a + b);
        let tol1 = SQRT_EPS * x.abs() + tol / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            break;
        }
        if evaluations >= MAX_EVALUATIONS {
            return Err(OptimizeError::MaxEvaluations { evaluations });
        }
        let mut golden = true;
        if e.abs() > tol1 {
            // parabola through x, w, v
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let e_prev = e;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = if xm >= x { tol1 } else { -tol1 };
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 {
            x + d
        } else {
            x + tol1.copysign(d)
        };
        let fu = f(u)?;
        evaluations += 1;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }

    // fresh evaluation at the reported abscissa
    let min_value = f(x)?;
    Ok(OptimizationResult {
        argmin: x,
        min_value,
        bracket,
        evaluations: evaluations + 1,
        converged: true,
    })
}

/// `min_{α>0} h_κ(α)` over the default shape range with the default grid.
///
/// ```
/// use gamma_extremes::gamma_prob::Kappa;
/// use gamma_extremes::optimize::min_h;
///
/// let r = min_h(Kappa::new(2.0).unwrap(), 1e-8).unwrap();
/// assert!((r.argmin / 0.396184 - 1.0).abs() < 1e-3);
/// assert!((r.min_value - 0.841243).abs() < 1e-4);
/// ```
pub fn min_h(kappa: Kappa, tol: f64) -> Result<OptimizationResult, OptimizeError> {
    min_h_with_grid(kappa, tol, DEFAULT_GRID)
}

/// [`min_h`] with an explicit bracketing grid size.
pub fn min_h_with_grid(kappa: Kappa, tol: f64, grid_n: usize) -> Result<OptimizationResult, OptimizeError> {
    let objective = |x: f64| gamma_prob::h(kappa, x.exp()).map(Probability::value);
    let (lo, hi) = DEFAULT_ALPHA_RANGE;
    let bracket = bracket_minimum(objective, lo.ln(), hi.ln(), grid_n)
        .map_err(|err| match err {
            OptimizeError::NoInteriorMinimum { boundary, abscissa, value } => OptimizeError::NoInteriorMinimum {
                boundary,
                abscissa: abscissa.exp(),
                value,
            },
            other => other,
        })?;
    let result = brent_min(objective, bracket, tol)?;
    Ok(OptimizationResult {
        argmin: result.argmin.exp(),
        bracket: Bracket {
            lo: bracket.lo.exp(),
            mid: bracket.mid.exp(),
            hi: bracket.hi.exp(),
        },
        ..result
    })
}

/// One row of a function scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub alpha: f64,
    pub value: f64,
}

/// `h_κ` on `n` log-spaced shapes from `alpha_lo` to `alpha_hi` inclusive.
pub fn scan(kappa: Kappa, alpha_lo: f64, alpha_hi: f64, n: usize) -> Result<Vec<ScanRow>, OptimizeError> {
    if !(alpha_lo > 0.0 && alpha_lo < alpha_hi && alpha_hi.is_finite()) {
        return Err(OptimizeError::InvalidInput(format!(
            "need 0 < alpha_lo < alpha_hi, got [{alpha_lo}, {alpha_hi}]"
        )));
    }
    if n < 2 {
        return Err(OptimizeError::InvalidInput(format!("scan needs at least 2 points, got {n}")));
    }
    log_grid(alpha_lo, alpha_hi, n)
        .into_par_iter()
        .map(|alpha| {
            let value = gamma_prob::h(kappa, alpha)?.value();
            Ok(ScanRow { alpha, value })
        })
        .collect()
}

/// `n ≥ 2` equally spaced points from `lo` to `hi`, endpoints exact.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
        .collect()
}

/// `n ≥ 2` log-spaced points from `lo > 0` to `hi`, endpoints exact.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = linspace(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect();
    grid[0] = lo;
    grid[n - 1] = hi;
    grid
}
