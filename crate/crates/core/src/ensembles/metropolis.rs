//! Random-walk Metropolis sampler for the circular log-gas
//! `∝ ∏_{j<k} |e^{iφ_j} − e^{iφ_k}|^β`.
//!
//! Slower than the exact backend by a factor of order `n`; kept as an
//! independent route for cross-checking small sizes.

use std::f64::consts::TAU;
use std::fmt;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::{wrap_phase, Spectrum};
use crate::error::{Error, Result};
use crate::seed::SeedSpec;
use crate::spacings;
use crate::stats::ks_two_sample;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetropolisParams {
    /// Proposal standard deviation in units of the mean gap `2π/n`.
    pub width: f64,
    /// Burn-in length, in sweeps per phase (`burn_in_per_n · n` sweeps).
    pub burn_in_per_n: usize,
    /// Sweeps between retained samples, per phase.
    pub thin_per_n: usize,
    /// Acceptable range of the acceptance rate. At width `2π/n` the COE
    /// chain settles near 0.6 and small chains of either β near 0.65; a high
    /// rate only means short steps, so the upper limit is generous.
    pub acceptance_band: (f64, f64),
}

impl Default for MetropolisParams {
    fn default() -> Self {
        Self {
            width: 1.0,
            burn_in_per_n: 50,
            thin_per_n: 10,
            acceptance_band: (0.2, 0.7),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McmcDiagnostics {
    pub n: usize,
    pub beta: f64,
    pub proposals: u64,
    pub accepted: u64,
    pub acceptance_band: (f64, f64),
    /// Two-sample KS distance between the `s_min` samples of two chains.
    pub chain_ks: Option<f64>,
    pub chain_ks_limit: Option<f64>,
}

impl McmcDiagnostics {
    pub fn acceptance_rate(&self) -> f64 {
        if self.proposals == 0 {
            0.0
        } else {
            self.accepted as f64 / self.proposals as f64
        }
    }

    pub fn acceptance_ok(&self) -> bool {
        let r = self.acceptance_rate();
        r >= self.acceptance_band.0 && r <= self.acceptance_band.1
    }

    pub fn chains_ok(&self) -> bool {
        match (self.chain_ks, self.chain_ks_limit) {
            (Some(ks), Some(limit)) => ks < limit,
            _ => true,
        }
    }
}

impl fmt::Display for McmcDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} beta={} acceptance={:.3} (band {:.2}..{:.2}, {} proposals)",
            self.n,
            self.beta,
            self.acceptance_rate(),
            self.acceptance_band.0,
            self.acceptance_band.1,
            self.proposals
        )?;
        if let Some(ks) = self.chain_ks {
            write!(f, ", two-chain KS={ks:.4}")?;
            if let Some(limit) = self.chain_ks_limit {
                write!(f, " (limit {limit})")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct MetropolisChain {
    phases: Vec<f64>,
    beta: f64,
    step: f64,
    params: MetropolisParams,
    proposals: u64,
    accepted: u64,
}

impl MetropolisChain {
    /// Start from iid uniform phases.
    pub fn new<R: Rng + ?Sized>(n: usize, beta: f64, params: MetropolisParams, rng: &mut R) -> Self {
        assert!(n >= 1);
        let phases = (0..n).map(|_| TAU * rng.random::<f64>()).collect();
        Self {
            phases,
            beta,
            step: params.width * TAU / n as f64,
            params,
            proposals: 0,
            accepted: 0,
        }
    }

    /// `β Σ_j ln|2 sin((x − φ_j)/2)|` over `j ≠ skip`.
    fn pair_energy(&self, skip: usize, x: f64) -> f64 {
        let mut e = 0.0;
        for (j, &p) in self.phases.iter().enumerate() {
            if j != skip {
                e += (2.0 * (0.5 * (x - p)).sin()).abs().ln();
            }
        }
        self.beta * e
    }

    /// One sweep: a single-phase proposal for each phase in turn.
    pub fn sweep<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let n = self.phases.len();
        for i in 0..n {
            let noise: f64 = rng.sample(StandardNormal);
            let old = self.phases[i];
            let new = wrap_phase(old + self.step * noise);
            let delta = self.pair_energy(i, new) - self.pair_energy(i, old);
            self.proposals += 1;
            if delta >= 0.0 || rng.random::<f64>() < delta.exp() {
                self.phases[i] = new;
                self.accepted += 1;
            }
        }
    }

    pub fn burn_in<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        for _ in 0..self.params.burn_in_per_n * self.phases.len() {
            self.sweep(rng);
        }
    }

    /// Advance by the thinning interval and return the current spectrum.
    pub fn next_sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Spectrum {
        for _ in 0..self.params.thin_per_n * self.phases.len() {
            self.sweep(rng);
        }
        self.spectrum()
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_angles(self.phases.clone()).expect("chain phases are finite")
    }

    pub fn diagnostics(&self) -> McmcDiagnostics {
        McmcDiagnostics {
            n: self.phases.len(),
            beta: self.beta,
            proposals: self.proposals,
            accepted: self.accepted,
            acceptance_band: self.params.acceptance_band,
            chain_ks: None,
            chain_ks_limit: None,
        }
    }

    pub fn check_acceptance(&self) -> Result<()> {
        let diag = self.diagnostics();
        if diag.acceptance_ok() {
            Ok(())
        } else {
            Err(Error::Convergence(diag))
        }
    }
}

/// Run two independent chains for `samples` thinned draws each and compare
/// their minimal-spacing samples with a two-sample KS distance.
pub fn two_chain_check(
    n: usize,
    beta: f64,
    params: MetropolisParams,
    samples: usize,
    master_seed: u64,
    ks_limit: f64,
) -> Result<McmcDiagnostics> {
    let run = |rep: u64| {
        let mut rng = SeedSpec::new(master_seed, rep).rng();
        let mut chain = MetropolisChain::new(n, beta, params, &mut rng);
        chain.burn_in(&mut rng);
        let mins: Vec<f64> = (0..samples)
            .map(|_| spacings::extremes(&chain.next_sample(&mut rng)).0)
            .collect();
        (mins, chain.diagnostics())
    };
    let (a, da) = run(0);
    let (b, db) = run(1);
    let diag = McmcDiagnostics {
        proposals: da.proposals + db.proposals,
        accepted: da.accepted + db.accepted,
        chain_ks: Some(ks_two_sample(&a, &b)),
        chain_ks_limit: Some(ks_limit),
        ..da
    };
    if diag.acceptance_ok() && diag.chains_ok() {
        Ok(diag)
    } else {
        Err(Error::Convergence(diag))
    }
}
