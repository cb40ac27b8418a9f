//! Eigenphase samplers for circular ensembles and tensor products of
//! independent Haar unitaries.
//!
//! All samplers are pure functions of `(ensemble, SeedSpec)`: each call
//! builds its generator from the seed, so concurrent callers share nothing.

mod metropolis;
mod tensor;
mod verblunsky;

use std::f64::consts::TAU;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::SeedSpec;

pub use metropolis::{two_chain_check, McmcDiagnostics, MetropolisChain, MetropolisParams};
pub use tensor::tensor_spectrum;
pub use verblunsky::{prufer_phase_reference, VerblunskyModel};

/// Largest matrix size accepted by the Metropolis backend.
pub const MAX_MCMC_N: usize = 256;
/// Largest single circular-ensemble matrix size accepted by the exact backend.
pub const MAX_CIRCULAR_N: usize = 4096;
/// Largest number of phases a tensor product may produce (2^22).
pub const MAX_TENSOR_PHASES: usize = 1 << 22;

/// Reduce an angle to `[0, 2π)`.
///
/// `rem_euclid` can round a tiny negative input up to exactly `2π`; that
/// case maps to `0`.
#[inline]
pub fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Eigenphases of one unitary matrix, sorted non-decreasingly in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    phases: Vec<f64>,
}

impl Spectrum {
    /// Reduce arbitrary angles mod 2π and sort them.
    pub fn from_angles(mut angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::InvalidInput("spectrum must contain at least one phase".into()));
        }
        if let Some(bad) = angles.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite phase {bad}")));
        }
        for a in angles.iter_mut() {
            *a = wrap_phase(*a);
        }
        angles.sort_by(f64::total_cmp);
        Ok(Self { phases: angles })
    }

    /// Accept phases that already satisfy the spectrum invariants.
    pub fn from_sorted(phases: Vec<f64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::InvalidInput("spectrum must contain at least one phase".into()));
        }
        if let Some(bad) = phases.iter().find(|&&p| !(0.0..TAU).contains(&p)) {
            return Err(Error::InvalidInput(format!("phase {bad} outside [0, 2π)")));
        }
        if phases.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput("phases are not sorted".into()));
        }
        Ok(Self { phases })
    }

    pub(crate) fn from_sorted_unchecked(phases: Vec<f64>) -> Self {
        debug_assert!(Self::from_sorted(phases.clone()).is_ok());
        Self { phases }
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn into_phases(self) -> Vec<f64> {
        self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    /// The spectrum of `e^{i·shift} U`.
    pub fn rotated(&self, shift: f64) -> Spectrum {
        Spectrum::from_angles(self.phases.iter().map(|p| p + shift).collect())
            .expect("rotation of a valid spectrum")
    }

    pub fn is_valid(&self) -> bool {
        !self.phases.is_empty()
            && self.phases.iter().all(|p| (0.0..TAU).contains(p))
            && self.phases.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Which ensemble to sample.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EnsembleSpec {
    /// Diagonal unitary with iid uniform phases (β = 0).
    Cpe { n: usize },
    /// Circular orthogonal ensemble (β = 1).
    Coe { n: usize },
    /// Circular unitary ensemble (β = 2).
    Cue { n: usize },
    /// `U_1 ⊗ … ⊗ U_k` with independent CUE factors of the given sizes.
    TensorCue { factors: Vec<usize> },
}

impl EnsembleSpec {
    /// `k` qubits: `CUE_2^{⊗k}`.
    pub fn qubits(k: usize) -> Self {
        EnsembleSpec::TensorCue { factors: vec![2; k] }
    }

    /// Two qunits: `CUE_n ⊗ CUE_n`.
    pub fn qunits(n: usize) -> Self {
        EnsembleSpec::TensorCue { factors: vec![n, n] }
    }

    /// Level repulsion exponent; `None` for tensor products.
    pub fn beta(&self) -> Option<u8> {
        match self {
            EnsembleSpec::Cpe { .. } => Some(0),
            EnsembleSpec::Coe { .. } => Some(1),
            EnsembleSpec::Cue { .. } => Some(2),
            EnsembleSpec::TensorCue { .. } => None,
        }
    }

    /// Total matrix size `N`.
    pub fn size(&self) -> usize {
        match self {
            EnsembleSpec::Cpe { n } | EnsembleSpec::Coe { n } | EnsembleSpec::Cue { n } => *n,
            EnsembleSpec::TensorCue { factors } => factors
                .iter()
                .try_fold(1usize, |acc, &f| acc.checked_mul(f))
                .unwrap_or(usize::MAX),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            EnsembleSpec::Cpe { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSize("CPE size must be at least 1".into()));
                }
            }
            EnsembleSpec::Coe { n } | EnsembleSpec::Cue { n } => {
                if *n == 0 || *n > MAX_CIRCULAR_N {
                    return Err(Error::InvalidSize(format!(
                        "circular ensemble size {n} outside 1..={MAX_CIRCULAR_N}"
                    )));
                }
            }
            EnsembleSpec::TensorCue { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSize("tensor product needs at least one factor".into()));
                }
                if let Some(f) = factors.iter().find(|&&f| !(2..=MAX_CIRCULAR_N).contains(&f)) {
                    return Err(Error::InvalidSize(format!(
                        "tensor factor size {f} outside 2..={MAX_CIRCULAR_N}"
                    )));
                }
                if self.size() > MAX_TENSOR_PHASES {
                    return Err(Error::InvalidSize(format!(
                        "tensor product has more than {MAX_TENSOR_PHASES} phases"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for EnsembleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleSpec::Cpe { n } => write!(f, "CPE_{n}"),
            EnsembleSpec::Coe { n } => write!(f, "COE_{n}"),
            EnsembleSpec::Cue { n } => write!(f, "CUE_{n}"),
            EnsembleSpec::TensorCue { factors } if factors.len() > 2 && factors.iter().all(|&m| m == factors[0]) => {
                write!(f, "CUE_{}^{}", factors[0], factors.len())
            }
            EnsembleSpec::TensorCue { factors } => {
                let parts: Vec<String> = factors.iter().map(|n| n.to_string()).collect();
                write!(f, "CUE_{{{}}}", parts.join("x"))
            }
        }
    }
}

/// How COE/CUE spectra are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum CircularBackend {
    /// Exact draw through random Verblunsky coefficients (CMV model).
    #[default]
    Verblunsky,
    /// Random-walk Metropolis on the log-gas; one fresh chain per call.
    Metropolis(MetropolisParams),
}

/// `n` iid uniform phases, sorted.
pub fn sample_cpe(n: usize, seed: SeedSpec) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::InvalidSize("CPE size must be at least 1".into()));
    }
    Ok(cpe_from_rng(n, &mut seed.rng()))
}

pub(crate) fn cpe_from_rng<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Spectrum {
    let mut phases: Vec<f64> = (0..n).map(|_| wrap_phase(TAU * rng.random::<f64>())).collect();
    phases.sort_by(f64::total_cmp);
    Spectrum::from_sorted_unchecked(phases)
}

/// Circular β-ensemble spectrum, COE for `beta = 1`, CUE for `beta = 2`.
pub fn sample_circular_beta(n: usize, beta: u8, seed: SeedSpec) -> Result<Spectrum> {
    sample_circular_beta_with(n, beta, seed, CircularBackend::Verblunsky)
}

pub fn sample_circular_beta_with(
    n: usize,
    beta: u8,
    seed: SeedSpec,
    backend: CircularBackend,
) -> Result<Spectrum> {
    check_circular_args(n, beta)?;
    let mut rng = seed.rng();
    match backend {
        CircularBackend::Verblunsky => Ok(circular_from_rng(n, beta, &mut rng)),
        CircularBackend::Metropolis(params) => {
            if n > MAX_MCMC_N {
                return Err(Error::InvalidSize(format!(
                    "Metropolis backend supports n <= {MAX_MCMC_N}, got {n}"
                )));
            }
            let mut chain = MetropolisChain::new(n, f64::from(beta), params, &mut rng);
            chain.burn_in(&mut rng);
            chain.check_acceptance()?;
            Ok(chain.spectrum())
        }
    }
}

fn check_circular_args(n: usize, beta: u8) -> Result<()> {
    if !(1..=2).contains(&beta) {
        return Err(Error::InvalidParameter(format!(
            "circular sampler supports beta in {{1, 2}}, got {beta}"
        )));
    }
    if n == 0 || n > MAX_CIRCULAR_N {
        return Err(Error::InvalidSize(format!(
            "circular ensemble size {n} outside 1..={MAX_CIRCULAR_N}"
        )));
    }
    Ok(())
}

pub(crate) fn circular_from_rng<R: Rng + ?Sized>(n: usize, beta: u8, rng: &mut R) -> Spectrum {
    VerblunskyModel::sample(n, f64::from(beta), rng).eigenphases()
}

/// Exact two-phase CUE spectrum.
///
/// The first phase is uniform; the gap δ to the second has density
/// `(1 - cos δ)/(2π)` and is drawn by rejection from `Uniform[0, 2π)` with
/// envelope constant 2 (acceptance probability `(1 - cos δ)/2`).
pub fn sample_cue2_direct(seed: SeedSpec) -> Spectrum {
    cue2_from_rng(&mut seed.rng())
}

pub(crate) fn cue2_from_rng<R: Rng + ?Sized>(rng: &mut R) -> Spectrum {
    let first = TAU * rng.random::<f64>();
    let (gap, _) = cue2_gap(rng);
    let mut phases = vec![wrap_phase(first), wrap_phase(first + gap)];
    phases.sort_by(f64::total_cmp);
    Spectrum::from_sorted_unchecked(phases)
}

/// Rejection draw of the CUE_2 gap; also returns the number of proposals used.
pub fn cue2_gap<R: Rng + ?Sized>(rng: &mut R) -> (f64, u32) {
    let mut proposals = 0;
    loop {
        proposals += 1;
        let delta = TAU * rng.random::<f64>();
        let u: f64 = rng.random();
        if 2.0 * u < 1.0 - delta.cos() {
            return (delta, proposals);
        }
    }
}

/// Dispatch on the ensemble kind.
///
/// Tensor factors are drawn in order from one substream: size-2 factors by
/// [`sample_cue2_direct`]'s rejection scheme, larger ones by the exact CUE
/// sampler.
pub fn sample_ensemble(spec: &EnsembleSpec, seed: SeedSpec) -> Result<Spectrum> {
    spec.validate()?;
    let mut rng = seed.rng();
    Ok(match spec {
        EnsembleSpec::Cpe { n } => cpe_from_rng(*n, &mut rng),
        EnsembleSpec::Coe { n } => circular_from_rng(*n, 1, &mut rng),
        EnsembleSpec::Cue { n } => circular_from_rng(*n, 2, &mut rng),
        EnsembleSpec::TensorCue { factors } => {
            let spectra: Vec<Spectrum> = factors
                .iter()
                .map(|&f| match f {
                    2 => cue2_from_rng(&mut rng),
                    _ => circular_from_rng(f, 2, &mut rng),
                })
                .collect();
            tensor_spectrum(&spectra)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn seed(rep: u64) -> SeedSpec {
        SeedSpec::new(0x5eed, rep)
    }

    #[test]
    fn wrap_phase_stays_in_range() {
        assert_eq!(wrap_phase(-1e-300), 0.0);
        assert_eq!(wrap_phase(TAU), 0.0);
        assert!((wrap_phase(-PI / 2.0) - 1.5 * PI).abs() < 1e-15);
        assert!(wrap_phase(-f64::EPSILON) < TAU);
    }

    #[test]
    fn spectrum_constructors() {
        let s = Spectrum::from_angles(vec![3.0 * PI, -PI / 2.0, 0.0]).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.len(), 3);
        assert!(Spectrum::from_sorted(vec![1.0, 0.5]).is_err());
        assert!(Spectrum::from_sorted(vec![TAU]).is_err());
        assert!(Spectrum::from_sorted(vec![]).is_err());
        assert!(Spectrum::from_angles(vec![f64::NAN]).is_err());
        // coinciding phases are legal
        assert!(Spectrum::from_sorted(vec![0.0, 0.0, 1.0]).is_ok());
    }

    #[test]
    fn cpe_shapes_and_determinism() {
        let one = sample_cpe(1, seed(0)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.is_valid());
        assert_eq!(sample_cpe(4, seed(9)).unwrap(), sample_cpe(4, seed(9)).unwrap());
        assert_ne!(sample_cpe(4, seed(9)).unwrap(), sample_cpe(4, seed(10)).unwrap());
        assert!(matches!(sample_cpe(0, seed(0)), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn circular_rejects_bad_arguments() {
        assert!(matches!(sample_circular_beta(4, 0, seed(0)), Err(Error::InvalidParameter(_))));
        assert!(matches!(sample_circular_beta(4, 3, seed(0)), Err(Error::InvalidParameter(_))));
        assert!(matches!(sample_circular_beta(0, 2, seed(0)), Err(Error::InvalidSize(_))));
        let mcmc = CircularBackend::Metropolis(MetropolisParams::default());
        assert!(matches!(
            sample_circular_beta_with(MAX_MCMC_N + 1, 2, seed(0), mcmc),
            Err(Error::InvalidSize(_))
        ));
    }

    #[test]
    fn circular_single_phase() {
        for beta in [1, 2] {
            let s = sample_circular_beta(1, beta, seed(3)).unwrap();
            assert_eq!(s.len(), 1);
            assert!(s.is_valid());
        }
    }

    #[test]
    fn cue2_direct_shape() {
        for rep in 0..200 {
            let s = sample_cue2_direct(seed(rep));
            assert_eq!(s.len(), 2);
            assert!(s.is_valid());
        }
    }

    #[test]
    fn ensemble_dispatch_sizes() {
        let cpe = sample_ensemble(&EnsembleSpec::Cpe { n: 16 }, seed(1)).unwrap();
        assert_eq!(cpe.len(), 16);
        assert!(cpe.is_valid());
        let q3 = sample_ensemble(&EnsembleSpec::qubits(3), seed(1)).unwrap();
        assert_eq!(q3.len(), 8);
        let mixed = EnsembleSpec::TensorCue { factors: vec![2, 3] };
        assert_eq!(sample_ensemble(&mixed, seed(1)).unwrap().len(), 6);
        assert!(sample_ensemble(&EnsembleSpec::TensorCue { factors: vec![] }, seed(1)).is_err());
        assert!(sample_ensemble(&EnsembleSpec::TensorCue { factors: vec![1, 2] }, seed(1)).is_err());
        assert!(sample_ensemble(&EnsembleSpec::qubits(23), seed(1)).is_err());
    }

    #[test]
    fn beta_accessor() {
        assert_eq!(EnsembleSpec::Cpe { n: 3 }.beta(), Some(0));
        assert_eq!(EnsembleSpec::Coe { n: 3 }.beta(), Some(1));
        assert_eq!(EnsembleSpec::Cue { n: 3 }.beta(), Some(2));
        assert_eq!(EnsembleSpec::qunits(3).beta(), None);
        assert_eq!(EnsembleSpec::qunits(3).size(), 9);
        assert_eq!(EnsembleSpec::qubits(22).size(), 1 << 22);
    }

    #[test]
    fn large_outputs_are_valid() {
        let big = sample_ensemble(&EnsembleSpec::Cpe { n: 1 << 20 }, seed(2)).unwrap();
        assert_eq!(big.len(), 1 << 20);
        assert!(big.is_valid());
        let q20 = sample_ensemble(&EnsembleSpec::qubits(20), seed(2)).unwrap();
        assert_eq!(q20.len(), 1 << 20);
        assert!(q20.is_valid());
        let cue = sample_ensemble(&EnsembleSpec::Cue { n: 1024 }, seed(2)).unwrap();
        assert_eq!(cue.len(), 1024);
        assert!(cue.is_valid());
    }
}
