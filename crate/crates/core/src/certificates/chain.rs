use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use super::{
    compare_with_reference, int, pow2, q_expansion, reference, require_definite, CertificateError, CertificateReport,
    Compare, SignVerdict, Verification, VerificationReport,
};
use crate::exact_poly::{rational, RationalFunction, RationalPoly};

/// Which of the two exponential inequalities a chain belongs to.
///
/// `Plus` uses `τ+ = 1/(α + √α)` on `0 < w < 1/2`; `Minus` uses
/// `τ− = 1/(α − √α)` on `0 < w ≤ 1/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    /// `1 ± 2w − w²`.
    fn factor(self) -> RationalPoly {
        match self {
            Side::Plus => RationalPoly::from_integers([1i64, 2, -1]),
            Side::Minus => RationalPoly::from_integers([1i64, -2, -1]),
        }
    }

    /// Order of the truncated logarithm series.
    fn log_order(self) -> u32 {
        match self {
            Side::Plus => 5,
            Side::Minus => 4,
        }
    }

    /// Order of the truncated exponential series in `R±`.
    fn exp_order(self) -> u32 {
        match self {
            Side::Plus => 4,
            Side::Minus => 3,
        }
    }

    /// `(m, a, b)` such that `F± = m·(1−w²)^a·(1±2w−w²)^b·P±`.
    ///
    /// `H±` uses `2m` with the same powers.
    fn clearing(self) -> (i64, u32, u32) {
        match self {
            Side::Plus => (15, 3, 5),
            Side::Minus => (3, 2, 4),
        }
    }

    fn sign(self) -> &'static str {
        match self {
            Side::Plus => "+",
            Side::Minus => "−",
        }
    }
}

fn w_poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_integers(c.iter().copied())
}

/// `x − x²/2 + x³/3 − …` up to `x^order`, by Horner.
fn truncated_log(x: &RationalFunction, order: u32) -> RationalFunction {
    let coeff = |k: u32| {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        RationalFunction::constant(rational(sign, i64::from(k)))
    };
    let mut acc = coeff(order);
    for k in (1..order).rev() {
        acc = &coeff(k) + &(x * &acc);
    }
    x * &acc
}

/// `(P, Q)` as exact rational functions of `w`.
///
/// `P = −1 + α·log_n(1 + τ)` and `Q = −1/2 + α·log_n(1 + τ/2)` with
/// `α = (1−w²)²/(4w²)`, `τ = 4w²/((1−w²)(1 ± 2w − w²))` and `log_n` the
/// Taylor polynomial of order 5 (plus) or 4 (minus).
pub fn build_p_q(side: Side) -> (RationalFunction, RationalFunction) {
    let one_minus_w2 = w_poly(&[1, 0, -1]);
    let four_w2 = w_poly(&[0, 0, 4]);
    let alpha = RationalFunction::new(one_minus_w2.pow(2), four_w2.clone()).expect("nonzero");
    let tau = RationalFunction::new(four_w2, &one_minus_w2 * &side.factor()).expect("nonzero");
    let eta = tau.scale(&rational(1, 2));
    let n = side.log_order();
    let p = &RationalFunction::constant(rational(-1, 1)) + &(&alpha * &truncated_log(&tau, n));
    let q = &RationalFunction::constant(rational(-1, 2)) + &(&alpha * &truncated_log(&eta, n));
    (p, q)
}

/// Float evaluation of `R+` at `α > 1` straight from its definition in `α`.
pub fn r_plus(alpha: f64) -> f64 {
    r_float(alpha, Side::Plus)
}

/// Float evaluation of `R−` at `α ≥ (15/8)²` straight from its definition in `α`.
pub fn r_minus(alpha: f64) -> f64 {
    r_float(alpha, Side::Minus)
}

fn r_float(alpha: f64, side: Side) -> f64 {
    let s = alpha.sqrt();
    let tau = match side {
        Side::Plus => 1.0 / (alpha + s),
        Side::Minus => 1.0 / (alpha - s),
    };
    let log_n = |x: f64| {
        (1..=side.log_order())
            .map(|k| {
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * x.powi(k as i32) / f64::from(k)
            })
            .sum::<f64>()
    };
    let exp_n = |x: f64| {
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=side.exp_order() {
            term *= x / f64::from(k);
            sum += term;
        }
        sum
    };
    let p = -1.0 + alpha * log_n(tau);
    let q = -0.5 + alpha * log_n(tau / 2.0);
    let w = 1.0 / ((alpha + 1.0).sqrt() + s);
    let lead = match side {
        Side::Plus => 1.0 + 4.0 * w,
        Side::Minus => 1.0 - 4.0 * w,
    };
    lead * exp_n(p) + 2.0 * exp_n(q) - 3.0
}

struct ChainData {
    /// `F± / (±2w)` and `H± / w`.
    f_inner: RationalPoly,
    h_inner: RationalPoly,
    /// `R± · ((1−w²)^a (1±2w−w²)^b)^order / w³`.
    l_core: RationalPoly,
}

fn build_chain(side: Side) -> Result<ChainData, CertificateError> {
    let (p, q) = build_p_q(side);
    let (m, a, b) = side.clearing();
    let base = &w_poly(&[1, 0, -1]).pow(a) * &side.factor().pow(b);
    let f = p.mul_poly(&base.scale(&int(m))).into_polynomial()?;
    let h = q.mul_poly(&base.scale(&int(2 * m))).into_polynomial()?;
    let two_w = match side {
        Side::Plus => w_poly(&[0, 2]),
        Side::Minus => w_poly(&[0, -2]),
    };
    let f_inner = f.div_exact(&two_w)?;
    let h_inner = h.div_exact(&RationalPoly::variable())?;

    // Shared denominator D keeps both truncated exponentials over D^order.
    let d = base.scale(&int(2 * m));
    let p_rf = RationalFunction::new(f.scale(&int(2)), d.clone())?;
    let q_rf = RationalFunction::new(h, d.clone())?;
    let lead = match side {
        Side::Plus => w_poly(&[1, 4]),
        Side::Minus => w_poly(&[1, -4]),
    };
    let order = side.exp_order();
    let r = &(&p_rf.truncated_exp(order).mul_poly(&lead) + &q_rf.truncated_exp(order).scale(&int(2)))
        - &RationalFunction::constant(int(3));
    let (r_num, r_den) = r.into_parts();
    let w3 = RationalPoly::monomial(BigRational::one(), 3);
    let l_core = (&r_num * &base.pow(order)).div_exact(&(&r_den * &w3))?;
    Ok(ChainData {
        f_inner,
        h_inner,
        l_core,
    })
}

struct SideSpec {
    verification: Verification,
    f_ref: &'static [&'static str],
    h_ref: &'static [&'static str],
    g_ref: &'static [&'static str],
    i_ref: &'static [&'static str],
    v_ref: &'static [&'static str],
    /// `w = 1/(c(1+q²))`.
    c: i64,
    /// `(1+q²)` powers for G/I and V.
    gi_power: u32,
    v_power: u32,
    /// `G = 2^g · (1+q²)^gi_power · F/(2w)`, `I = 2^i · (1+q²)^gi_power · H/w`.
    g_shift: u32,
    i_shift: u32,
    /// `L = l_scale · l_core`, `V = −2^v_shift · (1+q²)^v_power · L`.
    l_scale: i64,
    v_shift: u32,
    gi_verdict: SignVerdict,
}

fn verify_chain(side: Side, spec: SideSpec, compare: Compare) -> Result<VerificationReport, CertificateError> {
    let start = Instant::now();
    let s = side.sign();
    let data = build_chain(side)?;
    let mut out = VerificationReport::new(spec.verification);

    let mut f_report = CertificateReport::new(&format!("F{s}"), 'w', &data.f_inner);
    compare_with_reference(&mut f_report, &data.f_inner, spec.f_ref, Compare::Full)?;
    let mut h_report = CertificateReport::new(&format!("H{s}"), 'w', &data.h_inner);
    compare_with_reference(&mut h_report, &data.h_inner, spec.h_ref, Compare::Full)?;
    let (m, a, b) = side.clearing();
    out.checks.push(crate::certificates::Check::new(
        &format!("F{s}-H{s}-inner"),
        format!(
            "{m}(1−w²)^{a}(1{}2w−w²)^{b} P{s} = {}2w·({}) and H{s} = w·({})",
            if side == Side::Plus { "+" } else { "−" },
            if side == Side::Plus { "" } else { "−" },
            data.f_inner.display("w"),
            data.h_inner.display("w"),
        ),
    ));

    let timed = |name: String, poly: RationalPoly, reference, verdict, started: Instant| {
        let mut report = CertificateReport::new(&name, 'q', &poly);
        compare_with_reference(&mut report, &poly, reference, compare)?;
        require_definite(&report, verdict)?;
        report.elapsed = started.elapsed();
        Ok::<_, CertificateError>(report)
    };

    let t = Instant::now();
    let g = q_expansion(&data.f_inner, spec.c, spec.gi_power, &pow2(spec.g_shift))?;
    let g = match side {
        Side::Plus => g,
        // F− = −2w·inner, so F−/(2w) = −inner.
        Side::Minus => -g,
    };
    let mut g_report = timed(format!("G{s}"), g, spec.g_ref, spec.gi_verdict, t)?;
    g_report.notes.push(format!(
        "{} ⇒ P{s} {} for w = 1/({}(1+q²)), q real",
        spec.gi_verdict,
        if spec.gi_verdict == SignVerdict::AllNegative { "< 0" } else { "> 0" },
        spec.c
    ));

    let t = Instant::now();
    let i = q_expansion(&data.h_inner, spec.c, spec.gi_power, &pow2(spec.i_shift))?;
    let mut i_report = timed(format!("I{s}"), i, spec.i_ref, spec.gi_verdict, t)?;
    i_report.notes.push(format!(
        "{} ⇒ Q{s} {}",
        spec.gi_verdict,
        if spec.gi_verdict == SignVerdict::AllNegative { "< 0" } else { "> 0" }
    ));

    let t = Instant::now();
    let l = data.l_core.scale(&int(spec.l_scale));
    let v = q_expansion(&l, spec.c, spec.v_power, &-pow2(spec.v_shift))?;
    let mut v_report = timed(format!("V{s}"), v, spec.v_ref, SignVerdict::AllPositive, t)?;
    let (factor, r_sign) = match side {
        Side::Plus => ("9720000(1−w²)^12(1+2w−w²)^20 w^−3 > 0", "R+ < 0"),
        Side::Minus => ("−648(1−w²)^6(1−2w−w²)^12 w^−3 < 0", "R− > 0"),
    };
    v_report.notes.push(format!(
        "V{s} = −2^{}(1+q²)^{} L{s} > 0 ⇒ L{s} < 0; L{s} = c·R{s} with c = {factor} ⇒ {r_sign}",
        spec.v_shift, spec.v_power
    ));

    out.certificates = vec![g_report, i_report, v_report];
    if side == Side::Minus {
        out.notes.push(
            "the reference minus-side exponent reads τ+³/3; τ−³/3 is used, matching the definition of P−".into(),
        );
    }
    out.elapsed = start.elapsed();
    Ok(out)
}

/// Rebuilds `G+`, `I+` and `V+` and checks their signs and reference coefficients.
pub fn verify_chain_plus(compare: Compare) -> Result<VerificationReport, CertificateError> {
    verify_chain(
        Side::Plus,
        SideSpec {
            verification: Verification::ChainPlus,
            f_ref: reference::F_PLUS_INNER,
            h_ref: reference::H_PLUS_INNER,
            g_ref: reference::G_PLUS_Q,
            i_ref: reference::I_PLUS_Q,
            v_ref: reference::V_PLUS_Q,
            c: 2,
            gi_power: 14,
            v_power: 62,
            g_shift: 14,
            i_shift: 13,
            l_scale: 9_720_000,
            v_shift: 54,
            gi_verdict: SignVerdict::AllNegative,
        },
        compare,
    )
}

/// Rebuilds `G−`, `I−` and `V−` and checks their signs and reference coefficients.
pub fn verify_chain_minus(compare: Compare) -> Result<VerificationReport, CertificateError> {
    verify_chain(
        Side::Minus,
        SideSpec {
            verification: Verification::ChainMinus,
            f_ref: reference::F_MINUS_INNER,
            h_ref: reference::H_MINUS_INNER,
            g_ref: reference::G_MINUS_Q,
            i_ref: reference::I_MINUS_Q,
            v_ref: reference::V_MINUS_Q,
            c: 4,
            gi_power: 10,
            v_power: 34,
            g_shift: 20,
            i_shift: 19,
            l_scale: -648,
            v_shift: 63,
            gi_verdict: SignVerdict::AllPositive,
        },
        compare,
    )
}
