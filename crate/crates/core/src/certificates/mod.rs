//! Exact reconstruction and verification of the positivity certificates.
//!
//! Every certificate is rebuilt from its definition (the `w`-parametrization
//! of `α`, the truncated logarithm and exponential series, the scale factors
//! and the rational substitution `w ↦ 1/(c(1+q²))`). The reference expansions
//! in [`reference`] only serve as expected values for spot checks.
//!
//! Six independent verifications make up the suite; see [`Verification`].

mod case1;
mod chain;
mod lemmas;
mod reference;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Duration;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact_poly::{substitute_rational, PolyError, RationalPoly};

pub use case1::{case1_margin, case1_margin_derivative, verify_case1_transcendental};
pub use chain::{build_p_q, r_minus, r_plus, verify_chain_minus, verify_chain_plus, Side};
pub use lemmas::{verify_case2_j, verify_scale_factors, verify_small_alpha_certificate};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertificateError {
    #[error("{certificate}: coefficient of {variable}^{index} is {computed}, reference value is {expected}")]
    ReferenceMismatch {
        certificate: String,
        variable: char,
        index: usize,
        expected: Box<BigRational>,
        computed: Box<BigRational>,
    },
    #[error("{certificate}: degree {computed}, reference degree {expected}")]
    DegreeMismatch {
        certificate: String,
        expected: usize,
        computed: usize,
    },
    #[error("{certificate}: sign check failed: {detail}")]
    SignViolation { certificate: String, detail: String },
    #[error("{check}: computed {computed:.12e}, expected {expected:.12e} within {tolerance:e}")]
    NumericMismatch {
        check: String,
        computed: f64,
        expected: f64,
        tolerance: f64,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Sign pattern of the nonzero coefficients of an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignVerdict {
    AllPositive,
    AllNegative,
    Mixed,
}

impl SignVerdict {
    pub fn of(coeffs: &[BigRational]) -> SignVerdict {
        let nonzero: Vec<&BigRational> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            SignVerdict::Mixed
        } else if nonzero.iter().all(|c| c.is_positive()) {
            SignVerdict::AllPositive
        } else if nonzero.iter().all(|c| c.is_negative()) {
            SignVerdict::AllNegative
        } else {
            SignVerdict::Mixed
        }
    }
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignVerdict::AllPositive => "all_positive",
            SignVerdict::AllNegative => "all_negative",
            SignVerdict::Mixed => "mixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpotCheck {
    pub index: usize,
    pub expected: BigRational,
    pub matched: bool,
}

/// One recomputed polynomial with its sign verdict and reference comparisons.
#[derive(Debug, Clone)]
pub struct CertificateReport {
    pub name: String,
    pub variable: char,
    pub degree: usize,
    pub coefficients: Vec<BigRational>,
    pub sign_verdict: SignVerdict,
    pub spot_checks: Vec<SpotCheck>,
    /// `None` for polynomials in `w`, where parity is irrelevant.
    pub odd_coefficients_zero: Option<bool>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CertificateReport {
    fn new(name: &str, variable: char, poly: &RationalPoly) -> Self {
        let coefficients = poly.coeffs().to_vec();
        let odd_coefficients_zero = (variable == 'q').then(|| poly.is_even());
        CertificateReport {
            name: name.to_string(),
            variable,
            degree: poly.degree().unwrap_or(0),
            sign_verdict: SignVerdict::of(&coefficients),
            coefficients,
            spot_checks: Vec::new(),
            odd_coefficients_zero,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }
}

/// Named side condition established during a verification.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub detail: String,
}

impl Check {
    fn new(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            detail: detail.into(),
        }
    }
}

/// How much of each reference expansion to compare against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Compare {
    /// Constant, `q²` and leading coefficients.
    #[default]
    Spot,
    /// Every coefficient.
    Full,
}

/// The six independent verifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verification {
    SmallAlpha,
    ChainPlus,
    ChainMinus,
    Case2J,
    Case1,
    ScaleFactors,
}

impl Verification {
    pub const ALL: [Verification; 6] = [
        Verification::SmallAlpha,
        Verification::ChainPlus,
        Verification::ChainMinus,
        Verification::Case2J,
        Verification::Case1,
        Verification::ScaleFactors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verification::SmallAlpha => "small-alpha",
            Verification::ChainPlus => "chain-plus",
            Verification::ChainMinus => "chain-minus",
            Verification::Case2J => "case2-j",
            Verification::Case1 => "case1",
            Verification::ScaleFactors => "scale-factors",
        }
    }

    pub fn run(self, compare: Compare) -> Result<VerificationReport, CertificateError> {
        match self {
            Verification::SmallAlpha => verify_small_alpha_certificate(),
            Verification::ChainPlus => verify_chain_plus(compare),
            Verification::ChainMinus => verify_chain_minus(compare),
            Verification::Case2J => verify_case2_j(),
            Verification::Case1 => verify_case1_transcendental(),
            Verification::ScaleFactors => verify_scale_factors(),
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Verification::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Verification::ALL.iter().map(|v| v.name()).collect();
                format!("unknown certificate '{s}', expected one of {}", names.join(", "))
            })
    }
}

/// Successful outcome of one verification.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub verification: Verification,
    pub certificates: Vec<CertificateReport>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(verification: Verification) -> Self {
        VerificationReport {
            verification,
            certificates: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }
}

pub type SuiteEntry = (Verification, Result<VerificationReport, CertificateError>);

/// Runs the selected verifications in parallel; results keep the input order.
pub fn run_suite(selection: &[Verification], compare: Compare) -> Vec<SuiteEntry> {
    selection.par_iter().map(|&v| (v, v.run(compare))).collect()
}

/// Human-readable rendering of suite results; timings are optional so the
/// output can be made deterministic.
pub fn render_text(entries: &[SuiteEntry], show_timing: bool) -> String {
    let mut s = String::new();
    for (v, result) in entries {
        match result {
            Err(e) => {
                let _ = writeln!(s, "{v}: FAIL: {e}");
            }
            Ok(r) => {
                if show_timing {
                    let _ = writeln!(s, "{v}: pass ({:.3} s)", r.elapsed.as_secs_f64());
                } else {
                    let _ = writeln!(s, "{v}: pass");
                }
                for c in &r.certificates {
                    let parity = match c.odd_coefficients_zero {
                        Some(true) => ", odd coefficients zero",
                        Some(false) => ", odd coefficients NONZERO",
                        None => "",
                    };
                    let _ = writeln!(
                        s,
                        "  {}: degree {} in {}, {}{}",
                        c.name, c.degree, c.variable, c.sign_verdict, parity
                    );
                    for sc in &c.spot_checks {
                        let _ = writeln!(
                            s,
                            "    {}^{} = {} {}",
                            c.variable,
                            sc.index,
                            sc.expected,
                            if sc.matched { "matches" } else { "DIFFERS" }
                        );
                    }
                    for n in &c.notes {
                        let _ = writeln!(s, "    note: {n}");
                    }
                }
                for c in &r.checks {
                    let _ = writeln!(s, "  check {}: {}", c.name, c.detail);
                }
                for n in &r.notes {
                    let _ = writeln!(s, "  note: {n}");
                }
            }
        }
    }
    s
}

/// Line records `name=...;verdict=...;detail=...`, one per certificate and check.
pub fn render_records(entries: &[SuiteEntry]) -> String {
    let clean = |t: &str| t.replace([';', '\n'], ",");
    let mut s = String::new();
    for (v, result) in entries {
        match result {
            Err(e) => {
                let _ = writeln!(s, "name={v};verdict=fail;detail={}", clean(&e.to_string()));
            }
            Ok(r) => {
                for c in &r.certificates {
                    let matched = c.spot_checks.iter().filter(|x| x.matched).count();
                    let _ = writeln!(
                        s,
                        "name={v}/{};verdict=pass;detail=sign={},degree={},spot={}/{}",
                        c.name,
                        c.sign_verdict,
                        c.degree,
                        matched,
                        c.spot_checks.len()
                    );
                }
                for c in &r.checks {
                    let _ = writeln!(s, "name={v}/{};verdict=pass;detail={}", c.name, clean(&c.detail));
                }
            }
        }
    }
    s
}

fn parse_reference(entries: &[&str]) -> Vec<BigRational> {
    entries
        .iter()
        .map(|e| BigRational::from_integer(e.parse().expect("reference tables hold integers")))
        .collect()
}

/// `scale · (1+q²)^power · p(1/(c(1+q²)))` as an exact polynomial in `q`.
fn q_expansion(p: &RationalPoly, c: i64, power: u32, scale: &BigRational) -> Result<RationalPoly, PolyError> {
    let one_plus_q2 = RationalPoly::from_integers([1i64, 0, 1]);
    let sub_den = one_plus_q2.scale(&BigRational::from_integer(c.into()));
    let rf = substitute_rational(p, &RationalPoly::one(), &sub_den)?;
    let (num, den) = rf.into_parts();
    (&num * &one_plus_q2.pow(power)).scale(scale).div_exact(&den)
}

/// Compares `computed` with a reference list.
///
/// For `q` expansions the list holds only even powers, so entry `k` sits at
/// `q^{2k}`. Spot mode checks the first two entries and the last one.
fn compare_with_reference(
    report: &mut CertificateReport,
    computed: &RationalPoly,
    reference: &[&str],
    compare: Compare,
) -> Result<(), CertificateError> {
    let expected = parse_reference(reference);
    let stride = if report.variable == 'q' { 2 } else { 1 };
    let reference_degree = stride * (expected.len() - 1);
    let degree = computed.degree().unwrap_or(0);
    if degree != reference_degree {
        return Err(CertificateError::DegreeMismatch {
            certificate: report.name.clone(),
            expected: reference_degree,
            computed: degree,
        });
    }
    let positions: Vec<usize> = match compare {
        Compare::Full => (0..expected.len()).collect(),
        Compare::Spot => {
            let mut p = vec![0, 1.min(expected.len() - 1), expected.len() - 1];
            p.dedup();
            p
        }
    };
    for k in positions {
        let index = stride * k;
        let got = computed.coeff(index);
        if got != expected[k] {
            return Err(CertificateError::ReferenceMismatch {
                certificate: report.name.clone(),
                variable: report.variable,
                index,
                expected: Box::new(expected[k].clone()),
                computed: Box::new(got),
            });
        }
        report.spot_checks.push(SpotCheck {
            index,
            expected: expected[k].clone(),
            matched: true,
        });
    }
    Ok(())
}

/// Requires an even `q` expansion with the given sign verdict and a nonzero
/// constant, which makes it strictly signed for every real `q`.
fn require_definite(report: &CertificateReport, expected: SignVerdict) -> Result<(), CertificateError> {
    let violation = |detail: String| CertificateError::SignViolation {
        certificate: report.name.clone(),
        detail,
    };
    if report.sign_verdict != expected {
        return Err(violation(format!("expected {expected}, found {}", report.sign_verdict)));
    }
    if report.odd_coefficients_zero == Some(false) {
        return Err(violation("odd powers of q present".into()));
    }
    if report.coefficients.first().is_none_or(|c| c.is_zero()) {
        return Err(violation("zero constant term".into()));
    }
    Ok(())
}

fn pow2(k: u32) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::one() << k)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
