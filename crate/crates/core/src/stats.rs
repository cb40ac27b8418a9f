//! Empirical estimators: histograms, moments, Kolmogorov–Smirnov distances,
//! least-squares scaling fits and the minimal/maximal-spacing rescalings.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::refdist::RescaleConstants;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    edges: Vec<f64>,
    counts: Vec<u64>,
    underflow: u64,
    overflow: u64,
}

impl Histogram {
    /// Empty histogram over strictly increasing `edges` (at least two).
    pub fn new(edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::InvalidInput("histogram needs at least two edges".into()));
        }
        if edges.iter().any(|e| !e.is_finite()) || edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("histogram edges must be finite and strictly increasing".into()));
        }
        let bins = edges.len() - 1;
        Ok(Self {
            edges,
            counts: vec![0; bins],
            underflow: 0,
            overflow: 0,
        })
    }

    pub fn add(&mut self, x: f64) {
        let last = self.edges[self.edges.len() - 1];
        if x < self.edges[0] || x.is_nan() {
            self.underflow += 1;
        } else if x >= last {
            self.overflow += 1;
        } else {
            let i = self.edges.partition_point(|&e| e <= x) - 1;
            self.counts[i] += 1;
        }
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn underflow(&self) -> u64 {
        self.underflow
    }

    pub fn overflow(&self) -> u64 {
        self.overflow
    }

    /// Samples that landed inside the edges.
    pub fn n_samples(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Counts normalised so that `Σ density·width = 1` over in-range samples.
    pub fn density(&self) -> Vec<f64> {
        let n = self.n_samples() as f64;
        self.counts
            .iter()
            .zip(self.edges.windows(2))
            .map(|(&c, w)| if n > 0.0 { c as f64 / (n * (w[1] - w[0])) } else { 0.0 })
            .collect()
    }

    /// Bin-wise sum of two histograms with identical edges.
    pub fn merge(&self, other: &Histogram) -> Result<Histogram> {
        if self.edges != other.edges {
            return Err(Error::InvalidInput("cannot merge histograms with different edges".into()));
        }
        Ok(Histogram {
            edges: self.edges.clone(),
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
            underflow: self.underflow + other.underflow,
            overflow: self.overflow + other.overflow,
        })
    }
}

/// `bins + 1` equally spaced edges over `[lo, hi]`.
pub fn uniform_edges(lo: f64, hi: f64, bins: usize) -> Vec<f64> {
    let bins = bins.max(1);
    (0..=bins)
        .map(|i| if i == bins { hi } else { lo + (hi - lo) * i as f64 / bins as f64 })
        .collect()
}

pub fn histogram(samples: &[f64], edges: &[f64]) -> Result<Histogram> {
    if samples.is_empty() {
        return Err(Error::InvalidInput("histogram of zero samples".into()));
    }
    let mut h = Histogram::new(edges.to_vec())?;
    for &x in samples {
        h.add(x);
    }
    Ok(h)
}

pub fn mean(samples: &[f64]) -> f64 {
    samples.iter().sum::<f64>() / samples.len() as f64
}

/// Unbiased (`n − 1`) sample variance; `None` for fewer than two samples.
pub fn unbiased_variance(samples: &[f64]) -> Option<f64> {
    if samples.len() < 2 {
        return None;
    }
    let m = mean(samples);
    let ss: f64 = samples.iter().map(|x| (x - m) * (x - m)).sum();
    Some(ss / (samples.len() - 1) as f64)
}

/// Standard error of the sample mean.
pub fn standard_error(samples: &[f64]) -> Option<f64> {
    unbiased_variance(samples).map(|v| (v / samples.len() as f64).sqrt())
}

/// One-sample KS statistic `sup_x |F_n(x) − F(x)|`, evaluated at the sorted
/// samples as `max(i/n − F(x_i), F(x_i) − (i−1)/n)`.
pub fn ks_distance<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = cdf(x);
        let above = (i as f64 + 1.0) / n - f;
        let below = f - i as f64 / n;
        d.max(above.abs()).max(below.abs())
    })
}

/// Two-sample KS statistic `sup_x |F_a(x) − F_b(x)|`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (na, nb) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < xs.len() && j < ys.len() {
        let x = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= x {
            i += 1;
        }
        while j < ys.len() && ys[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
    pub n_points: usize,
}

impl FitResult {
    pub fn predict(&self, x: f64) -> f64 {
        self.intercept + self.slope * x
    }
}

/// Ordinary least squares `y ≈ intercept + slope·x`.
pub fn least_squares(x: &[f64], y: &[f64]) -> Result<FitResult> {
    if x.len() != y.len() {
        return Err(Error::InvalidInput(format!(
            "fit needs matching lengths, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("fit data must be finite".into()));
    }
    let xm = mean(x);
    let ym = mean(y);
    let sxx: f64 = x.iter().map(|v| (v - xm) * (v - xm)).sum();
    if x.len() < 2 || sxx <= 0.0 {
        return Err(Error::InvalidInput("fit needs at least two distinct abscissae".into()));
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - xm) * (b - ym)).sum();
    let slope = sxy / sxx;
    let intercept = ym - slope * xm;
    let ss: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let r = b - (intercept + slope * a);
            r * r
        })
        .sum();
    Ok(FitResult {
        slope,
        intercept,
        residual_rms: (ss / x.len() as f64).sqrt(),
        n_points: x.len(),
    })
}

/// Fit `ln mean ≈ intercept + slope·ln N`; the slope is the exponent η in
/// `mean ≈ C N^η`.
pub fn fit_loglog(sizes: &[usize], means: &[f64]) -> Result<FitResult> {
    if let Some(bad) = means.iter().find(|&&m| m.is_nan() || m <= 0.0) {
        return Err(Error::InvalidInput(format!("log-log fit needs positive means, got {bad}")));
    }
    let x: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let y: Vec<f64> = means.iter().map(|m| m.ln()).collect();
    least_squares(&x, &y)
}

/// Fit `value ≈ intercept + slope·ln N`; the slope is the prefactor of `ln N`.
pub fn fit_loglinear(sizes: &[usize], values: &[f64]) -> Result<FitResult> {
    let x: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    least_squares(&x, values)
}

/// `x_min = A_β N^{1/(1+β)} s_min`, elementwise.
pub fn rescale_xmin(s_min: &[f64], n: usize, beta: u8, consts: &RescaleConstants) -> Result<Vec<f64>> {
    let scale = consts.xmin_scale(n, beta)?;
    Ok(s_min.iter().map(|s| scale * s).collect())
}

/// `y_min = s_min / ⟨s_min⟩` with the batch mean.
pub fn rescale_ymin(s_min: &[f64]) -> Result<Vec<f64>> {
    if s_min.is_empty() {
        return Err(Error::InvalidInput("cannot rescale an empty batch".into()));
    }
    let m = mean(s_min);
    if m.is_nan() || m <= 0.0 {
        return Err(Error::InvalidInput(format!("batch mean {m} is not positive")));
    }
    Ok(s_min.iter().map(|s| s / m).collect())
}

/// `z_max = π/√(6 Var) · (s_max − ⟨s_max⟩)` with batch mean and unbiased
/// variance, so the output has mean 0 and variance π²/6.
pub fn rescale_zmax(s_max: &[f64]) -> Result<Vec<f64>> {
    let var = unbiased_variance(s_max)
        .ok_or_else(|| Error::InvalidInput("z_max rescaling needs at least two samples".into()))?;
    if var.is_nan() || var <= 0.0 {
        return Err(Error::InvalidInput("z_max rescaling needs positive variance".into()));
    }
    let m = mean(s_max);
    let alpha = PI / (6.0 * var).sqrt();
    Ok(s_max.iter().map(|s| alpha * (s - m)).collect())
}
