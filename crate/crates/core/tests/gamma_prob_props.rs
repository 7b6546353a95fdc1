use proptest::prelude::*;
use statrs::distribution::{ContinuousCDF, Gamma};

use gamma_extremes::gamma_prob::{self, band, g, step_monotone_integral, GammaParams, Kappa};
use gamma_extremes::optimize::{self, log_grid, min_h, min_h_with_grid, Boundary, OptimizeError, DEFAULT_TOLERANCE};

fn kappa(v: f64) -> Kappa {
    Kappa::new(v).unwrap()
}

fn h(k: f64, a: f64) -> f64 {
    gamma_prob::h(kappa(k), a).unwrap().value()
}

proptest! {
    #[test]
    fn h_is_gamma_cdf_at_scaled_mean(k in 0.1f64..5.0, a in 0.05f64..500.0) {
        let d = Gamma::new(a, 1.0).unwrap();
        prop_assert!((h(k, a) - d.cdf(k * a)).abs() <= 1e-9);
    }

    #[test]
    fn g_is_scale_free(k in 0.1f64..5.0, a in 0.01f64..1e4, beta in 1e-3f64..1e3) {
        let scaled = g(kappa(k), &GammaParams::new(a, beta).unwrap()).unwrap().value();
        prop_assert!((scaled - h(k, a)).abs() <= 1e-12);
    }

    #[test]
    fn band_matches_cdf_difference(k in 0.1f64..4.0, a in 0.05f64..800.0, beta in 0.01f64..100.0) {
        let d = Gamma::new(a, 1.0 / beta).unwrap();
        let (m, s) = (a * beta, a.sqrt() * beta);
        let direct = d.cdf(m + k * s) - d.cdf((m - k * s).max(0.0));
        let b = band(&GammaParams::new(a, beta).unwrap(), kappa(k)).unwrap().value();
        prop_assert!((b - direct).abs() <= 1e-9, "{b} vs {direct}");
    }

    #[test]
    fn band_at_one_is_t(a in 1e-3f64..1e5) {
        let b = band(&GammaParams::standard(a).unwrap(), Kappa::ONE).unwrap().value();
        prop_assert!((b - gamma_prob::t(a).unwrap().value()).abs() <= 1e-15);
    }
}

#[test]
fn step_integral_below_one_where_h_decreases() {
    for k in [0.2, 0.5, 0.8, 1.0] {
        for a in log_grid(1e-3, 1e4, 120) {
            let s = step_monotone_integral(kappa(k), a).unwrap();
            assert!(s < 1.0, "kappa={k} alpha={a}: {s}");
            let ln_h = |x: f64| gamma_prob::ln_h(kappa(k), x).unwrap();
            assert!(ln_h(a + 1.0) < ln_h(a));
        }
    }
}

#[test]
fn small_shape_limit() {
    for k in [0.5, 1.0, 2.0] {
        assert!(h(k, 1e-6) > 0.9999);
    }
}

#[test]
fn phase_transition() {
    let grid = log_grid(1e-4, 1e7, 1000);
    let inf = |k: f64| grid.iter().map(|&a| h(k, a)).fold(f64::INFINITY, f64::min);
    assert!(inf(0.5) < 0.01);
    let one = inf(1.0);
    assert!(one > 0.5 && one < 0.501);
    let r = min_h(kappa(1.5), DEFAULT_TOLERANCE).unwrap();
    assert!(r.min_value > 0.5 && r.argmin > 1e-3 && r.argmin < 1e5);
}

#[test]
fn kappa_one_has_no_interior_minimum() {
    match min_h(Kappa::ONE, DEFAULT_TOLERANCE) {
        Err(OptimizeError::NoInteriorMinimum { boundary, value, .. }) => {
            assert_eq!(boundary, Boundary::Upper);
            assert!(value > 0.5 && value < 0.501);
        }
        other => panic!("expected a boundary infimum, got {other:?}"),
    }
}

#[test]
fn restart_robustness() {
    for k in [1.01, 1.1, 1.2, 1.5, 2.0, 3.0, 4.0] {
        let a = min_h_with_grid(kappa(k), DEFAULT_TOLERANCE, 200).unwrap();
        let b = min_h_with_grid(kappa(k), DEFAULT_TOLERANCE, 500).unwrap();
        assert!((a.argmin.ln() - b.argmin.ln()).abs() <= 1e-6, "kappa={k}: {} vs {}", a.argmin, b.argmin);
        assert!(a.min_value > 0.5 && a.converged);
    }
}

#[test]
fn scan_is_deterministic() {
    let a = optimize::scan(kappa(1.2), 1e-2, 1e3, 64).unwrap();
    let b = optimize::scan(kappa(1.2), 1e-2, 1e3, 64).unwrap();
    assert_eq!(a, b);
}
