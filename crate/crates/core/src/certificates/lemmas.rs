use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use super::{
    compare_with_reference, int, q_expansion, reference, require_definite, CertificateError, CertificateReport,
    Check, Compare, SignVerdict, Verification, VerificationReport,
};
use crate::exact_poly::{rational, verify_sign_on_interval, RationalFunction, RationalPoly, Sign};

fn w_poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_integers(c.iter().copied())
}

/// `Σ_{n=0}^{order} x^n / n!` for a polynomial `x`.
fn exp_poly(x: &RationalPoly, order: u32) -> RationalPoly {
    let mut acc = RationalPoly::one();
    for k in (1..=order).rev() {
        acc = &(&x.scale(&rational(1, i64::from(k))) * &acc) + &RationalPoly::one();
    }
    acc
}

/// `120[(3+3w−3w²−w³) − (1−w²)(Σ_{n≤4}(1+w)^n/n! + 2⁵/5!)]`.
pub(crate) fn small_alpha_i() -> RationalPoly {
    let head = w_poly(&[3, 3, -3, -1]);
    let tail = &exp_poly(&w_poly(&[1, 1]), 4) + &RationalPoly::constant(rational(32, 120));
    (&head - &(&w_poly(&[1, 0, -1]) * &tail)).scale(&int(120))
}

/// `24w·J` with `√α = (1−w²)/(2w)` and `√(α+1) = (1+w²)/(2w)`.
pub(crate) fn case2_j_numerator() -> Result<RationalPoly, CertificateError> {
    let s = RationalFunction::new(w_poly(&[1, 0, -1]), w_poly(&[0, 2]))?;
    let r = RationalFunction::new(w_poly(&[1, 0, 1]), w_poly(&[0, 2]))?;
    let c = |n: i64| RationalFunction::constant(int(n));
    let taylor = RationalFunction::from_poly(exp_poly(&w_poly(&[1, -1]), 4));
    let lead = &(&s.scale(&int(2)) + &c(1)) * &taylor;
    let s2 = &s * &s;
    let sr = &s * &r;
    let bracket = [
        &s2 * &s,
        -&(&s2 * &r),
        s2.scale(&int(4)),
        sr.scale(&int(-4)),
        s.scale(&int(8)),
        r.scale(&int(-2)),
        c(2),
    ]
    .iter()
    .fold(c(0), |acc, t| &acc + t);
    let j = &lead - &bracket;
    Ok(j.mul_poly(&w_poly(&[0, 24])).into_polynomial()?)
}

const SMALL_ALPHA_I: [i64; 7] = [3, 40, -153, 160, 145, 40, 5];
const CASE2_J: [i64; 7] = [-1, 1, 9, 38, -31, 9, -1];

fn as_strings(c: &[i64]) -> Vec<String> {
    c.iter().map(i64::to_string).collect()
}

fn compare_w(report: &mut CertificateReport, poly: &RationalPoly, expected: &[i64]) -> Result<(), CertificateError> {
    let owned = as_strings(expected);
    let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
    compare_with_reference(report, poly, &refs, Compare::Full)
}

/// Largest `w` in `(√2−1, 1)` below which `e^{1+w} < Σ_{n≤4}(1+w)^n/n! + 2⁵/5!`.
fn tail_bound_limit() -> f64 {
    let gap = |w: f64| {
        let x = 1.0 + w;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=4 {
            term *= x / f64::from(k);
            sum += term;
        }
        sum + 32.0 / 120.0 - x.exp()
    };
    let (mut lo, mut hi) = (std::f64::consts::SQRT_2 - 1.0, 1.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Certificate for `0 < α ≤ 1`: `(1+q²)⁶ I(1/(1+q²))` has seven positive coefficients.
pub fn verify_small_alpha_certificate() -> Result<VerificationReport, CertificateError> {
    let start = Instant::now();
    let mut out = VerificationReport::new(Verification::SmallAlpha);

    let i = small_alpha_i();
    let mut i_report = CertificateReport::new("I", 'w', &i);
    compare_w(&mut i_report, &i, &SMALL_ALPHA_I)?;

    let t = Instant::now();
    let expansion = q_expansion(&i, 1, 6, &BigRational::one())?;
    let mut report = CertificateReport::new("(1+q²)^6 I", 'q', &expansion);
    compare_with_reference(&mut report, &expansion, reference::SMALL_ALPHA_Q, Compare::Full)?;
    require_definite(&report, SignVerdict::AllPositive)?;

    // both sides at q = 1, where w = 1/2
    let lhs = int(64) * i.eval(&rational(1, 2));
    let rhs = expansion.eval(&int(1));
    if lhs != rhs {
        return Err(CertificateError::SignViolation {
            certificate: report.name.clone(),
            detail: format!("substitution check at q = 1: {lhs} ≠ {rhs}"),
        });
    }
    out.checks.push(Check::new("substitution-at-q=1", format!("2^6 I(1/2) = {rhs} = sum of coefficients")));
    report.notes.push("all_positive ⇒ I > 0 for 0 < w ≤ 1".into());
    report.elapsed = t.elapsed();

    // The target quantity itself, without the series bound.
    let target = |w: f64| (3.0 + 3.0 * w - 3.0 * w * w - w.powi(3)) / (1.0 - w * w) - (1.0 + w).exp();
    let lo = std::f64::consts::SQRT_2 - 1.0;
    let min = (0..1000)
        .map(|k| target(lo + (1.0 - lo) * f64::from(k) / 1000.0))
        .fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        return Err(CertificateError::NumericMismatch {
            check: "small-alpha direct margin".into(),
            computed: min,
            expected: 0.0,
            tolerance: 0.0,
        });
    }
    out.checks.push(Check::new(
        "direct-margin",
        format!("(3+3w−3w²−w³)/(1−w²) − e^(1+w) ≥ {min:.6} on a 1000-point grid of [√2−1, 1)"),
    ));
    out.notes.push(format!(
        "the tail bound e^(1+w) < Σ_(n≤4)(1+w)^n/n! + 2^5/5! holds only for w < {:.5}; \
         the direct margin above covers the remaining range",
        tail_bound_limit()
    ));

    out.certificates = vec![i_report, report];
    out.elapsed = start.elapsed();
    Ok(out)
}

/// Case `2 < α < (15/8)²`: the numerator of `J` is positive on `(1/4, √3−√2)`.
pub fn verify_case2_j() -> Result<VerificationReport, CertificateError> {
    let start = Instant::now();
    let mut out = VerificationReport::new(Verification::Case2J);

    let numerator = case2_j_numerator()?;
    let mut report = CertificateReport::new("24w·J", 'w', &numerator);
    compare_w(&mut report, &numerator, &CASE2_J)?;

    // √3 − √2 < 1/3 ⇔ 4/3 < √2 ⇔ (4/3)² < 2
    let four_thirds = rational(4, 3);
    if &four_thirds * &four_thirds >= int(2) {
        return Err(CertificateError::SignViolation {
            certificate: report.name.clone(),
            detail: "√3 − √2 < 1/3 fails".into(),
        });
    }
    out.checks.push(Check::new("enclosure", "√3 − √2 < 1/3, since it reduces to 16/9 < 2"));

    let (lo, hi) = (rational(1, 4), rational(1, 3));
    let violation = |detail: &str| CertificateError::SignViolation {
        certificate: "24w·J".into(),
        detail: detail.into(),
    };
    if !verify_sign_on_interval(&numerator, &lo, &hi, Sign::Positive)? {
        return Err(violation("numerator not positive on (1/4, 1/3)"));
    }
    out.checks.push(Check::new("sturm", "no root in (1/4, 1/3), positive at 1/4, 7/24 and 1/3"));

    let shifted = &numerator - &RationalPoly::constant(rational(353, 2048));
    if !verify_sign_on_interval(&shifted, &lo, &hi, Sign::Positive)? {
        return Err(violation("numerator dips below 353/2048 on (1/4, 1/3)"));
    }
    let at_quarter = numerator.eval_f64(0.25);
    let reference = 0.1723633;
    if at_quarter < reference - 1e-6 {
        return Err(CertificateError::NumericMismatch {
            check: "24w·J at 1/4".into(),
            computed: at_quarter,
            expected: reference,
            tolerance: 1e-6,
        });
    }
    out.checks.push(Check::new(
        "termwise-bound",
        format!("numerator > 353/2048 = {} on (1/4, 1/3); value at 1/4 is {at_quarter}", 353.0 / 2048.0),
    ));
    report.notes.push("mixed signs: positivity is local to the interval (value −1 at w = 0)".into());

    out.certificates = vec![report];
    out.elapsed = start.elapsed();
    Ok(out)
}

/// Positivity of the factors cleared along the chains, plus the `w`
/// parametrization identities they rely on.
pub fn verify_scale_factors() -> Result<VerificationReport, CertificateError> {
    let start = Instant::now();
    let mut out = VerificationReport::new(Verification::ScaleFactors);
    let half = rational(1, 2);
    let quarter = rational(1, 4);
    let zero = int(0);
    let factors = [
        ("1−w²", w_poly(&[1, 0, -1]), &half),
        ("1+2w−w²", w_poly(&[1, 2, -1]), &half),
        ("1−2w−w²", w_poly(&[1, -2, -1]), &quarter),
    ];
    for (name, poly, hi) in factors {
        if !verify_sign_on_interval(&poly, &zero, hi, Sign::Positive)? {
            return Err(CertificateError::SignViolation {
                certificate: name.into(),
                detail: format!("not positive on (0, {hi}]"),
            });
        }
        out.checks.push(Check::new(name, format!("positive on (0, {hi}]")));
    }

    // α = (1−w²)²/(4w²), √α = (1−w²)/(2w), √(α+1) = (1+w²)/(2w)
    let s = RationalFunction::new(w_poly(&[1, 0, -1]), w_poly(&[0, 2]))?;
    let r = RationalFunction::new(w_poly(&[1, 0, 1]), w_poly(&[0, 2]))?;
    let one = RationalFunction::constant(BigRational::one());
    let identities = [
        ("α+1 = (√(α+1))²", &(&s * &s) + &one, &r * &r),
        ("√(α+1) − √α = w", &r - &s, RationalFunction::from_poly(RationalPoly::variable())),
        (
            "α + √α = (1−w²)(1+2w−w²)/(4w²)",
            &(&s * &s) + &s,
            RationalFunction::new(&w_poly(&[1, 0, -1]) * &w_poly(&[1, 2, -1]), w_poly(&[0, 0, 4]))?,
        ),
        (
            "α − √α = (1−w²)(1−2w−w²)/(4w²)",
            &(&s * &s) - &s,
            RationalFunction::new(&w_poly(&[1, 0, -1]) * &w_poly(&[1, -2, -1]), w_poly(&[0, 0, 4]))?,
        ),
    ];
    for (name, lhs, rhs) in identities {
        if lhs != rhs {
            return Err(CertificateError::SignViolation {
                certificate: "parametrization".into(),
                detail: format!("{name} fails"),
            });
        }
        out.checks.push(Check::new(name, "exact identity in w"));
    }
    out.notes.push("w = 1/(2(1+q²)) sweeps (0, 1/2] and w = 1/(4(1+q²)) sweeps (0, 1/4] as q ranges over ℝ".into());
    out.elapsed = start.elapsed();
    Ok(out)
}
