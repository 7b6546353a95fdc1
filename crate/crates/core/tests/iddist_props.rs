use proptest::prelude::*;
use statrs::distribution::{Discrete, NegativeBinomial, Poisson};

use gamma_extremes::gamma_prob;
use gamma_extremes::iddist::{
    band_prob, compound_poisson_series, conjecture_scan, format_sig12, moments, DistributionSpec, Family,
    SERIES_TAIL,
};

fn band(spec: DistributionSpec) -> f64 {
    band_prob(&spec).unwrap().value()
}

fn integer_set(center: f64, half: f64) -> (i64, i64) {
    ((center - half).max(0.0).ceil() as i64, (center + half).floor() as i64)
}

proptest! {
    #[test]
    fn gamma_band_is_scale_free(alpha in 1e-3f64..1e5, beta in 1e-3f64..1e3) {
        let b = band(DistributionSpec::GammaDist { alpha, beta });
        prop_assert!((b - gamma_prob::t(alpha).unwrap().value()).abs() <= 1e-12);
    }

    #[test]
    fn poisson_band_matches_pmf_sum(lambda in 0.01f64..200.0) {
        let (lo, hi) = integer_set(lambda, lambda.sqrt());
        let d = Poisson::new(lambda).unwrap();
        let direct: f64 = (lo..=hi).map(|k| d.pmf(k as u64)).sum();
        let b = band(DistributionSpec::Poisson { lambda });
        prop_assert!((b - direct).abs() <= 1e-12);
    }

    #[test]
    fn poisson_boundary_perturbation(lambda in 0.01f64..200.0) {
        let s = lambda.sqrt();
        let frac = |x: f64| (x - x.round()).abs();
        prop_assume!(frac(lambda - s) > 1e-9 && frac(lambda + s) > 1e-9);
        prop_assert_eq!(integer_set(lambda, s - 1e-12), integer_set(lambda, s + 1e-12));
    }

    #[test]
    fn negative_binomial_matches_pmf_sum(r in 0.05f64..50.0, p in 0.02f64..0.98) {
        let m = moments(&DistributionSpec::NegativeBinomial { r, p }).unwrap();
        let (lo, hi) = integer_set(m.mean, m.variance.sqrt());
        let d = NegativeBinomial::new(r, p).unwrap();
        let direct: f64 = (lo..=hi).map(|k| d.pmf(k as u64)).sum();
        let b = band(DistributionSpec::NegativeBinomial { r, p });
        prop_assert!((b - direct).abs() <= 1e-10);
    }

    #[test]
    fn compound_series_is_monotone(rate in 0.01f64..100.0, scale in 0.1f64..10.0) {
        let s = compound_poisson_series(rate, scale).unwrap();
        prop_assert!(s.tail_bound <= SERIES_TAIL);
        prop_assert!(s.partial_sums.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!((s.value - s.partial_sums.last().copied().unwrap_or(0.0)).abs() <= 1e-15);
    }
}

#[test]
fn integer_boundaries_are_inclusive() {
    // λ = 4: the band is {2, ..., 6}
    let d = Poisson::new(4.0).unwrap();
    let direct: f64 = (2..=6u64).map(|k| d.pmf(k)).sum();
    assert!((band(DistributionSpec::Poisson { lambda: 4.0 }) - direct).abs() <= 1e-14);
}

#[test]
fn poisson_one_and_a_half() {
    let b = band(DistributionSpec::Poisson { lambda: 1.5 });
    assert!((b - 0.585716670389628).abs() <= 1e-12);
}

#[test]
fn normal_baseline_is_the_threshold() {
    let r = conjecture_scan(Family::Normal, &Family::Normal.default_grid(), None).unwrap();
    assert_eq!(r.min_band, r.threshold);
    assert!(r.violations.is_empty());
}

#[test]
fn scan_csv_is_stable() {
    let grid = Family::Poisson.default_grid();
    let a = conjecture_scan(Family::Poisson, &grid, None).unwrap().to_csv();
    let b = conjecture_scan(Family::Poisson, &grid, None).unwrap().to_csv();
    assert_eq!(a, b);
    assert!(a.starts_with("lambda,value\n") && a.ends_with('\n'));
    assert_eq!(a.lines().count(), 201);
    assert_eq!(format_sig12(0.5), "0.500000000000");
}
