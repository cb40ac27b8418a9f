//! Rescaled nearest-neighbour spacings on the circle.
//!
//! For sorted phases `φ_1 ≤ … ≤ φ_N` the spacings are
//! `(φ_{i+1} − φ_i)·N/2π` plus the wraparound gap `((2π − φ_N) + φ_1)·N/2π`,
//! so they sum to `N` and have unit mean.

use std::f64::consts::TAU;

use crate::ensembles::Spectrum;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SpacingSet {
    raw: Vec<f64>,
    ordered: Vec<f64>,
}

impl SpacingSet {
    /// Spacings in spectral order, wraparound gap last.
    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    /// Spacings sorted non-decreasingly: `s_1 = s_min ≤ … ≤ s_N = s_max`.
    pub fn ordered(&self) -> &[f64] {
        &self.ordered
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn extremal(&self) -> (f64, f64) {
        extremal(self)
    }

    pub fn mth(&self, m: usize) -> Result<f64> {
        mth_spacing(self, m)
    }
}

pub fn compute_spacings(spectrum: &Spectrum) -> Result<SpacingSet> {
    let phases = spectrum.phases();
    if phases.is_empty() {
        return Err(Error::InvalidInput("cannot take spacings of an empty spectrum".into()));
    }
    let scale = phases.len() as f64 / TAU;
    let mut raw: Vec<f64> = phases.windows(2).map(|w| (w[1] - w[0]) * scale).collect();
    raw.push(wrap_gap(phases) * scale);
    let mut ordered = raw.clone();
    ordered.sort_by(f64::total_cmp);
    Ok(SpacingSet { raw, ordered })
}

/// `(2π − φ_N) + φ_1`, written to avoid cancellation when `φ_N ≈ 2π`.
#[inline]
fn wrap_gap(phases: &[f64]) -> f64 {
    (TAU - phases[phases.len() - 1]) + phases[0]
}

/// `(s_min, s_max)`.
pub fn extremal(sp: &SpacingSet) -> (f64, f64) {
    (sp.ordered[0], sp.ordered[sp.ordered.len() - 1])
}

/// The `m`-th smallest spacing, `1 ≤ m ≤ N`.
pub fn mth_spacing(sp: &SpacingSet, m: usize) -> Result<f64> {
    if m == 0 || m > sp.len() {
        return Err(Error::IndexOutOfRange {
            index: m,
            len: sp.len(),
        });
    }
    Ok(sp.ordered[m - 1])
}

/// `(s_min, s_max)` straight from a spectrum, without allocating.
pub fn extremes(spectrum: &Spectrum) -> (f64, f64) {
    let phases = spectrum.phases();
    let scale = phases.len() as f64 / TAU;
    let wrap = wrap_gap(phases);
    let (lo, hi) = phases
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold((wrap, wrap), |(lo, hi), g| (lo.min(g), hi.max(g)));
    (lo * scale, hi * scale)
}
