use proptest::prelude::*;
use libm::erf;
use statrs::function::gamma as sg;

use gamma_extremes::specfun::{
    ln_gamma, ln_reg_lower_gamma, ln_reg_upper_gamma, lower_series, reg_lower_gamma, reg_upper_gamma,
    std_normal_band, std_normal_cdf, upper_continued_fraction,
};

fn p(a: f64, x: f64) -> f64 {
    reg_lower_gamma(a, x).unwrap().value()
}

proptest! {
    #[test]
    fn complementarity(a in 1e-3f64..1e4, x in 0.0f64..2e4) {
        let q = reg_upper_gamma(a, x).unwrap().value();
        prop_assert!((p(a, x) + q - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn both_paths_agree_at_crossover(la in -6.0f64..7.0, f in 0.99f64..1.01) {
        let a = 10f64.powf(la);
        let x = (a + 1.0) * f;
        let s = lower_series(a, x).unwrap() + upper_continued_fraction(a, x).unwrap();
        prop_assert!((s - 1.0).abs() <= 1e-11, "a={a} x={x} sum={s}");
    }

    #[test]
    fn recurrence(a in 1e-2f64..100.0, x in 1e-3f64..300.0) {
        let step = (a * x.ln() - x - ln_gamma(a + 1.0).unwrap()).exp();
        prop_assert!((p(a + 1.0, x) - (p(a, x) - step)).abs() <= 1e-11);
    }

    #[test]
    fn increasing_in_x(a in 1e-2f64..1e3, x in 1e-3f64..2e3, dx in 1e-3f64..10.0) {
        prop_assert!(p(a, x + dx) >= p(a, x));
    }

    #[test]
    fn decreasing_in_a(a in 1e-2f64..1e3, da in 1e-2f64..10.0, f in 0.2f64..3.0) {
        let x = a * f;
        prop_assert!(p(a + da, x) <= p(a, x));
    }

    #[test]
    fn logs_match_direct(a in 0.1f64..500.0, f in 0.1f64..3.0) {
        let x = a * f;
        let lp = ln_reg_lower_gamma(a, x).unwrap();
        let lq = ln_reg_upper_gamma(a, x).unwrap();
        let (pv, qv) = (p(a, x), 1.0 - p(a, x));
        if pv > 1e-300 {
            prop_assert!((lp.exp() - pv).abs() <= 1e-12);
        }
        if qv > 1e-10 {
            prop_assert!((lq.exp() - reg_upper_gamma(a, x).unwrap().value()).abs() <= 1e-12);
        }
    }

    #[test]
    fn matches_statrs(a in 0.05f64..200.0, f in 0.0f64..3.0) {
        let x = a * f;
        prop_assert!((p(a, x) - sg::gamma_lr(a, x)).abs() <= 1e-10);
        prop_assert!((ln_gamma(a).unwrap() - sg::ln_gamma(a)).abs() <= 1e-10 * (1.0 + sg::ln_gamma(a).abs()));
    }

    #[test]
    fn normal_band_matches_erf(k in 1e-6f64..8.0) {
        let b = std_normal_band(k).unwrap().value();
        prop_assert!((b - erf(k / std::f64::consts::SQRT_2)).abs() <= 1e-14);
        prop_assert!((std_normal_cdf(k).unwrap().value() - 0.5 - b / 2.0).abs() <= 1e-14);
    }
}

#[test]
fn integer_shape_closed_forms() {
    for n in 1..=10u32 {
        for i in 0..200 {
            let x = f64::from(i) * 0.25;
            let mut term = 1.0;
            let mut sum = 1.0;
            for k in 1..n {
                term *= x / f64::from(k);
                sum += term;
            }
            assert!((p(f64::from(n), x) - (1.0 - (-x).exp() * sum)).abs() <= 1e-12);
        }
    }
}

#[test]
fn half_integer_shape_is_erf() {
    for i in 1..400 {
        let x = f64::from(i) * 0.05;
        assert!((p(0.5, x) - erf(x.sqrt())).abs() <= 1e-13);
    }
}

#[test]
fn normal_band_increases_to_one() {
    let mut prev = 0.0;
    for i in 1..=800 {
        let b = std_normal_band(f64::from(i) * 0.01).unwrap().value();
        assert!(b > prev || b == 1.0);
        prev = b;
    }
    assert!((1.0 - std_normal_band(8.0).unwrap().value()) <= 1e-12);
}
