//! Quick end-to-end checks, run by `gaps selftest`. Each check takes at most
//! a few seconds on one core.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::ensembles::{tensor_spectrum, two_chain_check, EnsembleSpec, MetropolisParams, Spectrum};
use crate::error::Result;
use crate::poisson::{exact_mean_max, exact_mean_min, sample_exp_spacings};
use crate::quad::integrate;
use crate::refdist::{cdf_xmin, RefDensity, RescaleConstants};
use crate::seed::SeedSpec;
use crate::spacings::compute_spacings;
use crate::stats::{ks_distance, mean, standard_error};

use super::{run_batch, with_workers, ExperimentConfig, Statistic};

#[derive(Debug, Clone, Serialize)]
pub struct SelftestCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<SelftestCheck>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Outcome = Result<(bool, String)>;
type Check = (&'static str, fn() -> Outcome);

pub fn run_selftest() -> SelftestReport {
    let checks: [Check; 8] = [
        ("densities integrate to one", densities),
        ("x_min change of variables", change_of_variables),
        ("spacings of a regular spectrum", regular_spacings),
        ("tensor-product phases", tensor_phases),
        ("N=4 minimal spacings match exact laws", small_n_laws),
        ("Poisson spacing oracle", poisson_means),
        ("Metropolis chains agree", metropolis_chains),
        ("batches do not depend on the worker count", worker_independence),
    ];
    let checks = checks
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
            SelftestCheck {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect();
    SelftestReport { checks }
}

fn densities() -> Outcome {
    let all = [
        RefDensity::MinCue2x2,
        RefDensity::MinCue4,
        RefDensity::MinCpe4,
        RefDensity::XMin { beta: 0 },
        RefDensity::XMin { beta: 1 },
        RefDensity::XMin { beta: 2 },
        RefDensity::SMin { beta: 1, n: 20 },
        RefDensity::WignerCoe,
        RefDensity::WignerCue,
        RefDensity::Exponential,
        RefDensity::YMinCue2x2,
    ];
    let mut worst: f64 = 0.0;
    for r in all {
        let (lo, hi) = r.support();
        let hi = if hi.is_finite() { hi } else { lo + 60.0 };
        worst = worst.max((integrate(|x| r.pdf(x), lo, hi, 1e-12)? - 1.0).abs());
    }
    let gumbel = integrate(|x| RefDensity::Gumbel.pdf(x), -10.0, 60.0, 1e-12)?;
    worst = worst.max((gumbel - 1.0).abs());
    Ok((worst < 1e-6, format!("largest |mass - 1| = {worst:.2e}")))
}

fn change_of_variables() -> Outcome {
    let consts = RescaleConstants::default();
    let (n, beta) = (50, 1u8);
    let scale = consts.xmin_scale(n, beta)?;
    let smin = RefDensity::SMin { beta, n };
    let worst = [0.02, 0.05, 0.1]
        .iter()
        .map(|&s| (smin.cdf(s) - cdf_xmin(s * scale, beta)).abs())
        .fold(0.0, f64::max);
    Ok((worst < 1e-9, format!("largest cdf mismatch = {worst:.2e}")))
}

fn regular_spacings() -> Outcome {
    let n = 8;
    let spectrum = Spectrum::from_angles((0..n).map(|j| 0.3 + TAU * j as f64 / n as f64).collect())?;
    let set = compute_spacings(&spectrum)?;
    let worst = set.raw().iter().map(|s| (s - 1.0).abs()).fold(0.0, f64::max);
    Ok((worst < 1e-12, format!("largest |s - 1| = {worst:.2e}")))
}

fn tensor_phases() -> Outcome {
    let a = Spectrum::from_angles(vec![0.0, 1.0])?;
    let b = Spectrum::from_angles(vec![0.5, 3.0])?;
    let got = tensor_spectrum(&[a, b])?;
    let want = [0.5, 1.5, 3.0, 4.0];
    let worst = got.phases().iter().zip(want).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
    Ok((got.len() == 4 && worst < 1e-12, format!("phases {:?}", got.phases())))
}

fn small_n_laws() -> Outcome {
    let cases = [
        (EnsembleSpec::Cue { n: 4 }, RefDensity::MinCue4),
        (EnsembleSpec::qubits(2), RefDensity::MinCue2x2),
        (EnsembleSpec::Cpe { n: 4 }, RefDensity::MinCpe4),
    ];
    let mut detail = Vec::new();
    let mut ok = true;
    for (spec, r) in cases {
        let result = run_batch(&ExperimentConfig::new(spec.clone(), 1 << 14, 2024, Statistic::Min))?;
        let ks = ks_distance(&result.samples, |x| r.cdf(x));
        ok &= ks < 0.02;
        detail.push(format!("{spec}: KS {ks:.4}"));
    }
    Ok((ok, detail.join(", ")))
}

fn poisson_means() -> Outcome {
    let n = 50;
    let (mut mins, mut maxs) = (Vec::new(), Vec::new());
    for rep in 0..20_000 {
        let s = sample_exp_spacings(n, SeedSpec::new(7, rep))?;
        mins.push(s.min());
        maxs.push(s.max());
    }
    let z_min = (mean(&mins) - exact_mean_min(n)) / standard_error(&mins).unwrap_or(f64::INFINITY);
    let z_max = (mean(&maxs) - exact_mean_max(n)) / standard_error(&maxs).unwrap_or(f64::INFINITY);
    Ok((
        z_min.abs() < 5.0 && z_max.abs() < 5.0,
        format!("z-scores {z_min:.2} (min), {z_max:.2} (max)"),
    ))
}

fn metropolis_chains() -> Outcome {
    let diag = two_chain_check(4, 2.0, MetropolisParams::default(), 10_000, 11, 0.03);
    Ok(match diag {
        Ok(d) => (true, d.to_string()),
        Err(e) => (false, e.to_string()),
    })
}

fn worker_independence() -> Outcome {
    let cfg = ExperimentConfig::new(EnsembleSpec::Coe { n: 12 }, 300, 5, Statistic::Max);
    let one = with_workers(Some(1), || run_batch(&cfg))??;
    let two = with_workers(Some(2), || run_batch(&cfg))??;
    Ok((one == two, format!("mean {} with 1 and 2 workers", one.mean)))
}
