//! Exact oracle for the unit-rate Poisson point process on the half-line.
//!
//! Its spacings are iid `Exp(1)`, so the extremes of `N` spacings have
//! closed-form laws:
//!
//! * `P(min > t) = e^{−Nt}`, `⟨min⟩ = 1/N`;
//! * `P(max ≤ t) = (1 − e^{−t})^N`, `⟨max⟩ = H_N = Σ_{k≤N} 1/k`.
//!
//! These serve as ground truth for CPE and for the Poisson-like limits of
//! tensor-product spectra.

use rand::Rng;

use crate::error::{Error, Result};
use crate::seed::SeedSpec;

/// `N` iid `Exp(1)` spacings `Y_1, …, Y_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonSpacings {
    values: Vec<f64>,
}

impl PoissonSpacings {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// `N · Y_min`, which is exactly `Exp(1)`.
    pub fn scaled_min(&self) -> f64 {
        self.len() as f64 * self.min()
    }

    /// `Y_max − ⟨Y_max⟩`; converges to the zero-mean Gumbel law.
    pub fn centered_max(&self) -> f64 {
        self.max() - exact_mean_max(self.len())
    }

    /// `Y_max − ⟨Y_min⟩`, the literal alternative centring. It drifts like
    /// `ln N` and has no limit law; exposed so tests can tell the two apart.
    pub fn max_minus_mean_min(&self) -> f64 {
        self.max() - exact_mean_min(self.len())
    }
}

/// Inverse-CDF draw `−ln(1 − U)`.
pub fn sample_exp_spacings(n: usize, seed: SeedSpec) -> Result<PoissonSpacings> {
    if n == 0 {
        return Err(Error::InvalidSize("need at least one spacing".into()));
    }
    let mut rng = seed.rng();
    Ok(PoissonSpacings {
        values: (0..n).map(|_| exp1(&mut rng)).collect(),
    })
}

#[inline]
pub(crate) fn exp1<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // 1 − U lies in (0, 1], so the result is finite; U = 0 gives exactly 0,
    // which is replaced to keep spacings strictly positive.
    let y = -(1.0 - rng.random::<f64>()).ln();
    if y > 0.0 {
        y
    } else {
        f64::MIN_POSITIVE
    }
}

pub fn exact_mean_min(n: usize) -> f64 {
    1.0 / n as f64
}

/// Harmonic number `H_N`, summed from the smallest term up.
pub fn exact_mean_max(n: usize) -> f64 {
    (1..=n).rev().map(|k| 1.0 / k as f64).sum()
}

/// `P(min_{j≤N} Y_j > t) = e^{−Nt}`.
pub fn cdf_min_exceed(t: f64, n: usize) -> f64 {
    if t <= 0.0 {
        1.0
    } else {
        (-(n as f64) * t).exp()
    }
}

/// `P(max_{j≤N} Y_j ≤ t) = (1 − e^{−t})^N`.
pub fn cdf_max(t: f64, n: usize) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        // (1 − e^{−t})^N = exp(N ln(1 − e^{−t}))
        (n as f64 * (-(-t).exp()).ln_1p()).exp()
    }
}
