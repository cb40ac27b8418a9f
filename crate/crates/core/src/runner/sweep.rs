//! Mean extremal spacings across matrix sizes, with the log-scale fits.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ensembles::{sample_ensemble, EnsembleSpec};
use crate::error::{Error, Result};
use crate::seed::SeedSpec;
use crate::spacings::extremes;
use crate::stats::{fit_loglinear, fit_loglog, mean, standard_error, FitResult};

/// Ensemble family of a sweep. The sweep's size parameter is `N` for the
/// circular ensembles, the number of factors `k` for qubits and the factor
/// size `n` for two qunits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Cpe,
    Coe,
    Cue,
    Qubits,
    Qunits,
}

impl SweepKind {
    pub fn spec(&self, param: usize) -> EnsembleSpec {
        match self {
            SweepKind::Cpe => EnsembleSpec::Cpe { n: param },
            SweepKind::Coe => EnsembleSpec::Coe { n: param },
            SweepKind::Cue => EnsembleSpec::Cue { n: param },
            SweepKind::Qubits => EnsembleSpec::qubits(param),
            SweepKind::Qunits => EnsembleSpec::qunits(param),
        }
    }

    /// Whether the maximal-spacing fit uses `⟨s_max⟩²` (COE, CUE) rather
    /// than `⟨s_max⟩`.
    pub fn squares_max(&self) -> bool {
        matches!(self, SweepKind::Coe | SweepKind::Cue)
    }

    fn tag(&self) -> u64 {
        match self {
            SweepKind::Cpe => 1,
            SweepKind::Coe => 2,
            SweepKind::Cue => 3,
            SweepKind::Qubits => 4,
            SweepKind::Qunits => 5,
        }
    }

    /// Master seed of the batch at one size; a size's data do not depend on
    /// which other sizes are in the sweep.
    pub fn size_seed(&self, master_seed: u64, param: usize) -> u64 {
        SeedSpec::derive_master(master_seed, (self.tag() << 32) ^ param as u64)
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepKind::Cpe => "cpe",
            SweepKind::Coe => "coe",
            SweepKind::Cue => "cue",
            SweepKind::Qubits => "qubits",
            SweepKind::Qunits => "qunits",
        })
    }
}

impl FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cpe" => Ok(SweepKind::Cpe),
            "coe" => Ok(SweepKind::Coe),
            "cue" => Ok(SweepKind::Cue),
            "qubits" => Ok(SweepKind::Qubits),
            "qunits" => Ok(SweepKind::Qunits),
            _ => Err(Error::InvalidParameter(format!("unknown ensemble `{s}` (cpe, coe, cue, qubits, qunits)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    /// Size parameter as given to the sweep.
    pub param: usize,
    /// Number of eigenphases.
    pub n: usize,
    pub mean_min: f64,
    pub se_min: f64,
    pub mean_max: f64,
    pub se_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingResult {
    pub kind: SweepKind,
    pub reps: u64,
    pub master_seed: u64,
    pub rows: Vec<ScalingRow>,
    /// `ln⟨s_min⟩` against `ln N`; the slope is the exponent.
    pub min_fit: FitResult,
    /// `⟨s_max⟩²` (COE, CUE) or `⟨s_max⟩` against `ln N`; the slope is the
    /// prefactor of `ln N`.
    pub max_fit: FitResult,
    pub max_squared: bool,
}

impl ScalingResult {
    /// Refit on the rows with `lo ≤ N ≤ hi`.
    pub fn restricted(&self, lo: usize, hi: usize) -> Result<ScalingResult> {
        let rows: Vec<ScalingRow> = self.rows.iter().filter(|r| r.n >= lo && r.n <= hi).cloned().collect();
        let (min_fit, max_fit) = fit_scaling(&rows, self.max_squared)?;
        Ok(ScalingResult {
            rows,
            min_fit,
            max_fit,
            ..self.clone()
        })
    }

    /// Fitted `⟨s_min⟩` at `N`.
    pub fn min_line(&self, n: usize) -> f64 {
        self.min_fit.predict((n as f64).ln()).exp()
    }

    /// Fitted `⟨s_max⟩` at `N`.
    pub fn max_line(&self, n: usize) -> f64 {
        let v = self.max_fit.predict((n as f64).ln());
        if self.max_squared {
            v.max(0.0).sqrt()
        } else {
            v
        }
    }
}

/// Fits on an already computed table.
pub fn fit_scaling(rows: &[ScalingRow], max_squared: bool) -> Result<(FitResult, FitResult)> {
    let sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
    let mins: Vec<f64> = rows.iter().map(|r| r.mean_min).collect();
    let maxs: Vec<f64> = rows
        .iter()
        .map(|r| if max_squared { r.mean_max * r.mean_max } else { r.mean_max })
        .collect();
    Ok((fit_loglog(&sizes, &mins)?, fit_loglinear(&sizes, &maxs)?))
}

/// One batch per size parameter; each repetition records both extremes.
pub fn run_scaling_sweep(kind: SweepKind, params: &[usize], reps: u64, master_seed: u64) -> Result<ScalingResult> {
    if reps < 2 {
        return Err(Error::InvalidParameter("a sweep needs at least 2 reps per size".into()));
    }
    let mut rows = Vec::with_capacity(params.len());
    for &param in params {
        let spec = kind.spec(param);
        spec.validate()?;
        let seed = kind.size_seed(master_seed, param);
        let pairs: Vec<(f64, f64)> = (0..reps)
            .into_par_iter()
            .map(|rep| sample_ensemble(&spec, SeedSpec::new(seed, rep)).map(|s| extremes(&s)))
            .collect::<Result<_>>()?;
        let (mins, maxs): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        rows.push(ScalingRow {
            param,
            n: spec.size(),
            mean_min: mean(&mins),
            se_min: standard_error(&mins).unwrap_or(0.0),
            mean_max: mean(&maxs),
            se_max: standard_error(&maxs).unwrap_or(0.0),
        });
    }
    let (min_fit, max_fit) = fit_scaling(&rows, kind.squares_max())?;
    Ok(ScalingResult {
        kind,
        reps,
        master_seed,
        rows,
        min_fit,
        max_fit,
        max_squared: kind.squares_max(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, mean_min: f64, mean_max: f64) -> ScalingRow {
        ScalingRow {
            param: n,
            n,
            mean_min,
            se_min: 0.0,
            mean_max,
            se_max: 0.0,
        }
    }

    #[test]
    fn exact_synthetic_tables() {
        let rows: Vec<ScalingRow> = [2usize, 4, 8, 16, 32]
            .iter()
            .map(|&n| row(n, 1.0 / n as f64, (4.0 / std::f64::consts::PI * (n as f64).ln()).sqrt()))
            .collect();
        let (min_fit, max_fit) = fit_scaling(&rows, true).unwrap();
        assert!((min_fit.slope + 1.0).abs() < 1e-12);
        assert!(min_fit.residual_rms < 1e-12);
        assert!((max_fit.slope - 4.0 / std::f64::consts::PI).abs() < 1e-12);
        assert!(max_fit.intercept.abs() < 1e-12);
    }

    #[test]
    fn sizes_and_fits() {
        let r = run_scaling_sweep(SweepKind::Qubits, &[1, 2, 3], 64, 5).unwrap();
        assert_eq!(r.rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![2, 4, 8]);
        assert!(r.rows.iter().all(|r| r.mean_min <= 1.0 && r.mean_max >= 1.0));
        assert!(!r.max_squared);
        assert_eq!(r.min_fit.n_points, 3);
        let sub = r.restricted(4, 8).unwrap();
        assert_eq!(sub.rows.len(), 2);
        assert!(r.restricted(4, 4).is_err());
    }

    #[test]
    fn a_size_ignores_its_neighbours() {
        let a = run_scaling_sweep(SweepKind::Cue, &[3, 5], 50, 9).unwrap();
        let b = run_scaling_sweep(SweepKind::Cue, &[5, 7], 50, 9).unwrap();
        assert_eq!(a.rows[1], b.rows[0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(run_scaling_sweep(SweepKind::Cpe, &[4, 8], 1, 0).is_err());
        assert!(run_scaling_sweep(SweepKind::Cpe, &[0, 8], 10, 0).is_err());
        assert!(run_scaling_sweep(SweepKind::Qunits, &[1, 2], 10, 0).is_err());
        assert!("gue".parse::<SweepKind>().is_err());
        assert_eq!("qunits".parse::<SweepKind>().unwrap(), SweepKind::Qunits);
    }

    #[test]
    fn fitted_lines() {
        let r = run_scaling_sweep(SweepKind::Coe, &[2, 4, 8, 16], 100, 1).unwrap();
        assert!(r.max_squared);
        for row in &r.rows {
            // the fitted curve tracks the data within a few percent
            assert!((r.min_line(row.n) / row.mean_min - 1.0).abs() < 0.2);
            assert!((r.max_line(row.n) / row.mean_max - 1.0).abs() < 0.1);
        }
    }
}
