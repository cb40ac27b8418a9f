//! Seeded batch experiments, scaling sweeps and figure datasets.
//!
//! Repetition `i` of an experiment always samples from substream
//! `(master_seed, i)`. Per-repetition values are collected in repetition
//! order and every reduction runs sequentially over that vector, so results
//! are bit-identical for any worker count.

mod figures;
mod output;
mod selftest;
mod sweep;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ensembles::{sample_ensemble, EnsembleSpec};
use crate::error::{Error, Result};
use crate::refdist::RescaleConstants;
use crate::seed::SeedSpec;
use crate::spacings::{compute_spacings, extremes};
use crate::stats::{self, FitResult, Histogram};

pub use figures::{reproduce_figure, Axes, Figure, FigureId, FigureOptions, Role, Scale, Series, SeriesData};
pub use output::{
    write_fitline_csv, write_histogram_csv, write_reference_csv, write_scaling_csv, write_summary_json,
    Summary, HISTOGRAM_HEADER, SCALING_HEADER,
};
pub use selftest::{run_selftest, SelftestCheck, SelftestReport};
pub use sweep::{fit_scaling, run_scaling_sweep, ScalingResult, ScalingRow, SweepKind};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "GAPS_THREADS";

/// Upper bound on the number of values a single batch may hold.
pub const MAX_BATCH_VALUES: u64 = 1 << 28;

/// Per-spectrum statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Statistic {
    Min,
    Max,
    /// `m`-th smallest spacing, `1 ≤ m ≤ N`.
    Mth(usize),
    /// All `N` nearest-neighbour spacings, pooled.
    Nn,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Min => f.write_str("min"),
            Statistic::Max => f.write_str("max"),
            Statistic::Mth(m) => write!(f, "mth:{m}"),
            Statistic::Nn => f.write_str("nn"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Statistic::Min),
            "max" => Ok(Statistic::Max),
            "nn" => Ok(Statistic::Nn),
            _ => s
                .strip_prefix("mth:")
                .and_then(|m| m.parse().ok())
                .map(Statistic::Mth)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown statistic `{s}` (min, max, mth:M, nn)"))),
        }
    }
}

impl From<Statistic> for String {
    fn from(s: Statistic) -> Self {
        s.to_string()
    }
}

impl TryFrom<String> for Statistic {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rescaling {
    #[default]
    None,
    /// `A_β N^{1/(1+β)} s_min`; needs a β ensemble and the `min` statistic.
    Xmin,
    /// `s_min/⟨s_min⟩` with the batch mean.
    Ymin,
    /// `π/√(6 Var)·(s_max − ⟨s_max⟩)` with batch moments.
    Zmax,
}

impl fmt::Display for Rescaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rescaling::None => "none",
            Rescaling::Xmin => "xmin",
            Rescaling::Ymin => "ymin",
            Rescaling::Zmax => "zmax",
        })
    }
}

impl FromStr for Rescaling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Rescaling::None),
            "xmin" => Ok(Rescaling::Xmin),
            "ymin" => Ok(Rescaling::Ymin),
            "zmax" => Ok(Rescaling::Zmax),
            _ => Err(Error::InvalidParameter(format!("unknown rescaling `{s}` (none, xmin, ymin, zmax)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub ensemble: EnsembleSpec,
    pub reps: u64,
    pub master_seed: u64,
    pub statistic: Statistic,
    #[serde(default)]
    pub rescaling: Rescaling,
    /// Histogram bin count; `None` picks 60 for `zmax` and 40 otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bins: Option<usize>,
    /// Histogram range; `None` picks `[-4, 8]` for `zmax` and
    /// `[0, max sample]` otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<(f64, f64)>,
}

impl ExperimentConfig {
    pub fn new(ensemble: EnsembleSpec, reps: u64, master_seed: u64, statistic: Statistic) -> Self {
        Self {
            ensemble,
            reps,
            master_seed,
            statistic,
            rescaling: Rescaling::None,
            bins: None,
            range: None,
        }
    }

    pub fn with_rescaling(mut self, rescaling: Rescaling) -> Self {
        self.rescaling = rescaling;
        self
    }

    pub fn with_bins(mut self, bins: usize) -> Self {
        self.bins = Some(bins);
        self
    }

    pub fn with_range(mut self, lo: f64, hi: f64) -> Self {
        self.range = Some((lo, hi));
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.ensemble.validate()?;
        if self.reps == 0 {
            return Err(Error::InvalidParameter("reps must be at least 1".into()));
        }
        let n = self.ensemble.size();
        match self.statistic {
            Statistic::Mth(m) if m == 0 || m > n => {
                return Err(Error::IndexOutOfRange { index: m, len: n });
            }
            Statistic::Nn if self.reps.saturating_mul(n as u64) > MAX_BATCH_VALUES => {
                return Err(Error::InvalidParameter(format!(
                    "nn statistic would pool {} x {n} spacings (limit {MAX_BATCH_VALUES})",
                    self.reps
                )));
            }
            _ => {}
        }
        match (self.rescaling, self.statistic) {
            (Rescaling::Xmin | Rescaling::Ymin, s) if s != Statistic::Min => {
                return Err(Error::InvalidParameter(format!("{} rescaling applies to the min statistic", self.rescaling)));
            }
            (Rescaling::Zmax, s) if s != Statistic::Max => {
                return Err(Error::InvalidParameter("zmax rescaling applies to the max statistic".into()));
            }
            (Rescaling::Xmin, _) if self.ensemble.beta().is_none() => {
                return Err(Error::InvalidParameter("xmin rescaling needs a CPE, COE or CUE ensemble".into()));
            }
            _ => {}
        }
        if let Some(0) = self.bins {
            return Err(Error::InvalidParameter("bins must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.range {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidParameter(format!("invalid histogram range [{lo}, {hi}]")));
            }
        }
        Ok(())
    }

    fn default_bins(&self) -> usize {
        match self.rescaling {
            Rescaling::Zmax => 60,
            _ => 40,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    /// Number of values: `reps`, or `reps·N` for the `nn` statistic.
    pub count: u64,
    pub mean: f64,
    /// Unbiased variance; `None` when `count < 2`.
    pub variance: Option<f64>,
    pub histogram: Histogram,
    /// Values in repetition order, after rescaling.
    pub samples: Vec<f64>,
    pub fit: Option<FitResult>,
    /// Wall time; ignored by equality.
    pub elapsed: Duration,
}

impl PartialEq for ExperimentResult {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.count == other.count
            && self.mean.to_bits() == other.mean.to_bits()
            && self.variance.map(f64::to_bits) == other.variance.map(f64::to_bits)
            && self.histogram == other.histogram
            && self.samples.len() == other.samples.len()
            && self.samples.iter().zip(&other.samples).all(|(a, b)| a.to_bits() == b.to_bits())
            && self.fit == other.fit
    }
}

impl ExperimentResult {
    pub fn variance_undefined(&self) -> bool {
        self.variance.is_none()
    }

    pub fn standard_error(&self) -> Option<f64> {
        self.variance.map(|v| (v / self.count as f64).sqrt())
    }

    /// Re-derive the result under another rescaling from unrescaled samples,
    /// without sampling again.
    pub fn rescaled(&self, rescaling: Rescaling) -> Result<ExperimentResult> {
        if self.config.rescaling != Rescaling::None {
            return Err(Error::InvalidParameter("only unrescaled results can be rescaled".into()));
        }
        let config = ExperimentConfig {
            rescaling,
            bins: None,
            range: None,
            ..self.config.clone()
        };
        config.validate()?;
        let start = Instant::now();
        let mut result = summarize(config, self.samples.clone())?;
        result.elapsed = start.elapsed();
        Ok(result)
    }
}

/// Sample `reps` spectra, extract the statistic, rescale and summarize.
pub fn run_batch(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let start = Instant::now();
    let raw = collect_statistic(config)?;
    let mut result = summarize(config.clone(), raw)?;
    result.elapsed = start.elapsed();
    Ok(result)
}

fn collect_statistic(config: &ExperimentConfig) -> Result<Vec<f64>> {
    let spec = &config.ensemble;
    let master = config.master_seed;
    let per_rep = |rep: u64| -> Result<Vec<f64>> {
        let spectrum = sample_ensemble(spec, SeedSpec::new(master, rep))?;
        Ok(match config.statistic {
            Statistic::Min => vec![extremes(&spectrum).0],
            Statistic::Max => vec![extremes(&spectrum).1],
            Statistic::Mth(m) => vec![compute_spacings(&spectrum)?.mth(m)?],
            Statistic::Nn => compute_spacings(&spectrum)?.raw().to_vec(),
        })
    };
    let chunks: Vec<Vec<f64>> = (0..config.reps).into_par_iter().map(per_rep).collect::<Result<_>>()?;
    Ok(chunks.concat())
}

fn summarize(config: ExperimentConfig, raw: Vec<f64>) -> Result<ExperimentResult> {
    let n = config.ensemble.size();
    let samples = match config.rescaling {
        Rescaling::None => raw,
        Rescaling::Xmin => {
            let beta = config.ensemble.beta().expect("validated");
            stats::rescale_xmin(&raw, n, beta, &RescaleConstants::default())?
        }
        Rescaling::Ymin => stats::rescale_ymin(&raw)?,
        Rescaling::Zmax => stats::rescale_zmax(&raw)?,
    };
    let bins = config.bins.unwrap_or_else(|| config.default_bins());
    let (lo, hi) = match (config.range, config.rescaling) {
        (Some(r), _) => r,
        (None, Rescaling::Zmax) => (-4.0, 8.0),
        (None, _) => {
            let top = samples.iter().copied().fold(0.0, f64::max);
            // keep the largest sample inside the half-open last bin
            (0.0, if top > 0.0 { top.next_up() } else { 1.0 })
        }
    };
    let histogram = stats::histogram(&samples, &stats::uniform_edges(lo, hi, bins))?;
    Ok(ExperimentResult {
        count: samples.len() as u64,
        mean: stats::mean(&samples),
        variance: stats::unbiased_variance(&samples),
        histogram,
        samples,
        fit: None,
        elapsed: Duration::ZERO,
        config,
    })
}

/// Worker count requested through [`THREADS_ENV`]; `None` when unset, empty
/// or `0` (automatic).
pub fn workers_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) if v.trim().is_empty() => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) => Ok(None),
            Ok(w) => Ok(Some(w)),
            Err(_) => Err(Error::InvalidParameter(format!("{THREADS_ENV} must be a non-negative integer, got `{v}`"))),
        },
    }
}

/// Run `f` on a dedicated pool of `workers` threads, or on the global pool
/// when `workers` is `None`.
pub fn with_workers<T, F>(workers: Option<usize>, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("cannot start {w} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
