//! Extremal eigenphase spacings of circular random-matrix ensembles.
//!
//! The crate samples eigenphase spectra of the circular Poisson, orthogonal
//! and unitary ensembles (CPE, COE, CUE) and of tensor products of
//! independent CUE matrices, reduces them to rescaled nearest-neighbour
//! spacings, and compares the minimal and maximal spacing against closed-form
//! reference laws.
//!
//! Module map:
//!
//! * [`ensembles`]: spectrum samplers and the tensor-product construction.
//! * [`spacings`]: rescaled circular spacings and order statistics.
//! * [`refdist`]: reference densities, tails and rescaling constants.
//! * [`poisson`]: exact Poisson-process oracle (iid `Exp(1)` spacings).
//! * [`stats`]: histograms, KS distances, least-squares scaling fits.
//! * [`runner`]: seeded batch Monte Carlo, sweeps and figure datasets.
//! * [`quad`]: adaptive Gauss–Kronrod quadrature.
//! * [`seed`]: per-repetition RNG substreams.

pub mod ensembles;
pub mod error;
pub mod poisson;
pub mod quad;
pub mod refdist;
pub mod runner;
pub mod seed;
pub mod spacings;
pub mod stats;

pub use ensembles::{EnsembleSpec, Spectrum};
pub use error::{Error, Result};
pub use seed::SeedSpec;
pub use spacings::SpacingSet;
