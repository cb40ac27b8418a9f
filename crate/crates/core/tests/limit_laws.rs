//! Limit laws of the Poisson spacing oracle.

use gaps::poisson::{exact_mean_max, sample_exp_spacings};
use gaps::refdist::gumbel_cdf;
use gaps::stats::{ks_distance, mean, rescale_zmax, unbiased_variance};
use gaps::SeedSpec;

const BATCHES: u64 = 100_000;

#[test]
fn scaled_minimum_is_exponential() {
    let n = 1000;
    let scaled: Vec<f64> = (0..BATCHES)
        .map(|r| sample_exp_spacings(n, SeedSpec::new(31, r)).unwrap().scaled_min())
        .collect();
    let ks = ks_distance(&scaled, |y| 1.0 - (-y).exp());
    assert!(ks < 0.02, "KS {ks}");
}

#[test]
fn centred_maximum_is_gumbel() {
    let n = 10_000;
    let maxima: Vec<f64> = (0..BATCHES)
        .map(|r| sample_exp_spacings(n, SeedSpec::new(32, r)).unwrap().max())
        .collect();
    let h = exact_mean_max(n);
    let centred: Vec<f64> = maxima.iter().map(|m| m - h).collect();
    let ks = ks_distance(&centred, gumbel_cdf);
    assert!(ks < 0.02, "max - H_N: KS {ks}");

    let z = rescale_zmax(&maxima).unwrap();
    assert!(mean(&z).abs() < 1e-12);
    let var = unbiased_variance(&z).unwrap();
    assert!((var - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-9);
    let ks = ks_distance(&z, gumbel_cdf);
    assert!(ks < 0.02, "z_max: KS {ks}");
}
