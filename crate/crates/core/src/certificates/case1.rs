use std::time::Instant;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use super::{CertificateError, Check, Verification, VerificationReport};

/// Binary float with 256 significant bits.
type Hi = FBig<HalfEven, 2>;

const PRECISION: usize = 256;
const GRID: u32 = 1000;

fn hi(n: i64) -> Hi {
    Hi::from(n).with_precision(PRECISION).value()
}

fn hi_f64(x: f64) -> Hi {
    Hi::try_from(x).expect("finite").with_precision(PRECISION).value()
}

/// `ξ = 1/(√2 + √3) = √3 − √2`.
fn xi() -> Hi {
    hi(3).sqrt() - hi(2).sqrt()
}

/// `√2 − 1 = 1/(1 + √2)`.
fn upper() -> Hi {
    hi(2).sqrt() - hi(1)
}

/// `φ(w) = e^{1−w} + w − 3 + 2w/(1−w²)`.
fn phi(w: &Hi) -> Hi {
    let one = hi(1);
    let w2 = w * w;
    (&one - w).exp() + w - hi(3) + hi(2) * w / (&one - &w2)
}

/// `φ'(w) = −e^{1−w} + 1 + 2(1+w²)/(1−w²)²`.
fn phi_prime(w: &Hi) -> Hi {
    let one = hi(1);
    let w2 = w * w;
    let d = &one - &w2;
    -(&one - w).exp() + &one + hi(2) * (&one + &w2) / (&d * &d)
}

/// The Case-1 margin `e^{1−w} + w − 3 + 2w/(1−w²)`, evaluated in 256-bit arithmetic.
///
/// Positive on `[ξ, √2−1)`, where `ξ = √3−√2 ≈ 0.31784`; negative just below `ξ`.
pub fn case1_margin(w: f64) -> f64 {
    phi(&hi_f64(w)).to_f64().value()
}

/// Derivative of [`case1_margin`].
pub fn case1_margin_derivative(w: f64) -> f64 {
    phi_prime(&hi_f64(w)).to_f64().value()
}

fn check_value(name: &str, computed: &Hi, expected: f64, tolerance: f64) -> Result<Check, CertificateError> {
    let c = computed.to_f64().value();
    if (c - expected).abs() > tolerance {
        return Err(CertificateError::NumericMismatch {
            check: name.into(),
            computed: c,
            expected,
            tolerance,
        });
    }
    Ok(Check::new(name, format!("{c:.12} (reference {expected}, tolerance {tolerance:e})")))
}

/// Case `1 < α ≤ 2`, i.e. `ξ ≤ w < √2−1`: the reference derivative and value
/// bounds at `ξ`, then `φ > 0` and `φ' ≥ φ'(ξ)` on a 1000-point grid.
pub fn verify_case1_transcendental() -> Result<VerificationReport, CertificateError> {
    let start = Instant::now();
    let mut out = VerificationReport::new(Verification::Case1);
    let xi = xi();
    let d_xi = phi_prime(&xi);
    let v_xi = phi(&xi);
    out.checks.push(check_value("derivative-at-xi", &d_xi, 1.746594, 1e-5)?);
    out.checks.push(check_value("value-at-xi", &v_xi, 0.003095392, 1e-8)?);

    let span = upper() - &xi;
    let n = hi(i64::from(GRID));
    let mut min_phi = v_xi.clone();
    let mut min_d = d_xi.clone();
    for k in 0..GRID {
        let w = &xi + &span * hi(i64::from(k)) / &n;
        let p = phi(&w);
        let d = phi_prime(&w);
        if p <= hi(0) || d < d_xi {
            return Err(CertificateError::NumericMismatch {
                check: format!("grid point {k}"),
                computed: p.to_f64().value(),
                expected: 0.0,
                tolerance: 0.0,
            });
        }
        if p < min_phi {
            min_phi = p;
        }
        if d < min_d {
            min_d = d;
        }
    }
    out.checks.push(Check::new(
        "grid",
        format!(
            "φ ≥ {:.9} and φ' ≥ {:.6} at {GRID} points of [ξ, √2−1)",
            min_phi.to_f64().value(),
            min_d.to_f64().value()
        ),
    ));
    out.notes.push(format!("{PRECISION}-bit binary floating point; numeric evidence, not an interval proof"));
    out.elapsed = start.elapsed();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_at_xi() {
        let xi = xi();
        assert!((phi_prime(&xi).to_f64().value() - 1.74659350587).abs() < 1e-10);
        assert!((phi(&xi).to_f64().value() - 0.00309539190574).abs() < 1e-13);
        assert!((xi.to_f64().value() - 0.317_837_245_195_782_2).abs() < 1e-15);
    }

    #[test]
    fn sign_around_xi() {
        // 0.3 lies below ξ, so the margin is negative there
        assert!(case1_margin(0.3) < 0.0);
        assert!(case1_margin(0.35) > 0.0);
        assert!(case1_margin_derivative(0.35) > 1.746594);
    }
}
