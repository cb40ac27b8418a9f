//! Exact circular β-ensemble sampler.
//!
//! A CβE_n spectrum is the zero set of the degree-`n` paraorthogonal
//! polynomial built by the Szegő recursion
//!
//! ```text
//! Φ_{k+1}(z) = z Φ_k(z) − conj(α_k) Φ*_k(z)
//! ```
//!
//! from independent coefficients `α_0, …, α_{n−2}` with `α_k` rotation
//! invariant in the unit disk and `|α_k|² ~ Beta(1, β(n−k−1)/2)`, closed by a
//! uniform unimodular `α_{n−1}` (Killip–Nenciu). No matrix is formed.
//!
//! The zeros are located through the Prüfer phase: on the unit circle the
//! Blaschke product `B_k(z) = z Φ_k/Φ*_k` has modulus one, and its lifted
//! argument `ψ_k(θ)` obeys
//!
//! ```text
//! ψ_0 = θ,   ψ_{k+1} = θ + ψ_k + 2·atan2(Im(α_k e^{iψ_k}), 1 − Re(α_k e^{iψ_k}))
//! ```
//!
//! `ψ_{n−1}` is strictly increasing and gains exactly `2πn` over a turn, and
//! the eigenphases are the `n` solutions of `ψ_{n−1}(θ) ≡ arg conj(α_{n−1})`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use super::{wrap_phase, Spectrum};

#[derive(Debug, Clone)]
pub struct VerblunskyModel {
    coeffs: Vec<Complex64>,
    /// `1 − |α_k|²`, kept separately so that coefficients close to the unit
    /// circle do not lose their defect to rounding.
    defects: Vec<f64>,
    /// `arg conj(α_{n−1})`.
    boundary_phase: f64,
}

impl VerblunskyModel {
    /// Draw the coefficients of a CβE_n spectrum (`n ≥ 1`, `β > 0`).
    pub fn sample<R: Rng + ?Sized>(n: usize, beta: f64, rng: &mut R) -> Self {
        assert!(n >= 1 && beta > 0.0);
        let mut coeffs = Vec::with_capacity(n - 1);
        let mut defects = Vec::with_capacity(n - 1);
        for k in 0..n - 1 {
            let shape = beta * (n - k - 1) as f64 / 2.0;
            let u: f64 = rng.random();
            let defect = (1.0 - u).powf(1.0 / shape);
            let radius = (1.0 - defect).max(0.0).sqrt();
            let angle = TAU * rng.random::<f64>();
            coeffs.push(Complex64::from_polar(radius, angle));
            defects.push(defect);
        }
        let boundary_phase = TAU * rng.random::<f64>();
        Self {
            coeffs,
            defects,
            boundary_phase,
        }
    }

    /// Build a model from explicit coefficients (all strictly inside the disk).
    pub fn from_coefficients(coeffs: Vec<Complex64>, boundary_phase: f64) -> Self {
        assert!(coeffs.iter().all(|a| a.norm() < 1.0));
        let defects = coeffs.iter().map(|a| 1.0 - a.norm_sqr()).collect();
        Self {
            coeffs,
            defects,
            boundary_phase,
        }
    }

    pub fn size(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn boundary_phase(&self) -> f64 {
        self.boundary_phase
    }

    /// Lifted Prüfer phase `ψ_{n−1}(θ)` and its derivative in `θ`.
    ///
    /// Avoids per-step trigonometry: `e^{iψ_k}` is carried as a unit complex
    /// number and the accumulated Möbius rotation is unwrapped by counting
    /// crossings of the negative real axis. Each step rotates by less than π,
    /// so the crossing direction is unambiguous.
    pub fn prufer_phase(&self, theta: f64) -> (f64, f64) {
        let (psi, deriv, _) = self.evaluate(theta);
        (psi, deriv)
    }

    /// `(ψ, ψ', d/dθ ln|Φ*_{n−1}(e^{iθ})|)`.
    ///
    /// Since `Φ*_{k+1} = Φ*_k (1 − α_k e^{iψ_k})`, the log-modulus derivative
    /// is `Σ ψ_k' Im(α_k e^{iψ_k}) / |1 − α_k e^{iψ_k}|²`.
    fn evaluate(&self, theta: f64) -> (f64, f64, f64) {
        let z = Complex64::new(theta.cos(), theta.sin());
        let mut w = z;
        let mut acc = Complex64::new(1.0, 0.0);
        let mut winding: i64 = 0;
        let mut deriv = 1.0;
        let mut dlog = 0.0;
        for (&a, &defect) in self.coeffs.iter().zip(&self.defects) {
            let aw = a * w;
            let re = 1.0 - aw.re;
            let im = -aw.im;
            let inv = (re * re + im * im).recip();
            let q = Complex64::new((re * re - im * im) * inv, -2.0 * re * im * inv);
            let upper = !acc.im.is_sign_negative();
            acc *= q;
            let upper_now = !acc.im.is_sign_negative();
            if upper && !upper_now && q.im > 0.0 {
                winding += 1;
            } else if !upper && upper_now && q.im < 0.0 {
                winding -= 1;
            }
            w = w * z * q;
            dlog += deriv * aw.im * inv;
            deriv = 1.0 + defect * inv * deriv;
        }
        let n = self.size() as f64;
        let psi = n * theta + TAU * winding as f64 + acc.im.atan2(acc.re);
        (psi, deriv, dlog)
    }

    /// The `n` eigenphases, sorted.
    pub fn eigenphases(&self) -> Spectrum {
        let n = self.size();
        let cells = n.max(2);
        let g0 = self.prufer_phase(0.0).0;
        let mut grid_theta = Vec::with_capacity(cells + 1);
        let mut grid_psi = Vec::with_capacity(cells + 1);
        for j in 0..cells {
            let theta = TAU * j as f64 / cells as f64;
            grid_theta.push(theta);
            grid_psi.push(if j == 0 { g0 } else { self.prufer_phase(theta).0 });
        }
        grid_theta.push(TAU);
        grid_psi.push(g0 + TAU * n as f64);

        let first_target = g0 + wrap_phase(self.boundary_phase - g0);
        let mut phases = Vec::with_capacity(n);
        let mut cell = 0;
        let mut prev: Option<(f64, f64)> = None;
        for m in 0..n {
            let target = first_target + TAU * m as f64;
            while cell + 1 < cells && grid_psi[cell + 1] <= target {
                cell += 1;
            }
            let (mut lo, mut psi_lo) = (grid_theta[cell], grid_psi[cell]);
            if let Some((root, psi_root)) = prev {
                if root > lo {
                    lo = root;
                    psi_lo = psi_root;
                }
            }
            let root = self.solve(target, lo, grid_theta[cell + 1], psi_lo, grid_psi[cell + 1]);
            prev = Some((root, target));
            phases.push(wrap_phase(root));
        }
        phases.sort_by(f64::total_cmp);
        Spectrum::from_sorted_unchecked(phases)
    }

    /// Safeguarded Newton iteration for `ψ(θ) = target` on a bracket.
    ///
    /// `ψ` itself is a steep staircase when some `|α_k|` is close to one, so
    /// Newton is run on the smooth trigonometric polynomial
    /// `g = 2|Φ*_{n−1}| sin((ψ − target)/2)`, which has the same zeros.
    fn solve(&self, target: f64, mut lo: f64, mut hi: f64, psi_lo: f64, psi_hi: f64) -> f64 {
        let span = psi_hi - psi_lo;
        let mut x = if span > 0.0 {
            lo + ((target - psi_lo) / span).clamp(0.0, 1.0) * (hi - lo)
        } else {
            0.5 * (lo + hi)
        };
        for _ in 0..200 {
            let (psi, deriv, dlog) = self.evaluate(x);
            let f = psi - target;
            if f == 0.0 {
                return x;
            }
            if f < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            // g/g' with g'/g = dlog + (ψ'/2) cot h
            let (sin_h, cos_h) = (0.5 * f).sin_cos();
            let step = 2.0 * sin_h / (2.0 * dlog * sin_h + deriv * cos_h);
            let newton = x - step;
            // Newton converges quadratically, so a step this small leaves an
            // error far below the rounding noise of ψ itself. `g` also vanishes
            // where ψ hits the neighbouring targets, hence the branch check.
            if step.abs() <= 1e-11 && f.abs() < 1.0 && newton >= lo && newton <= hi {
                return newton;
            }
            x = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
            if hi - lo <= 1e-15 * (1.0 + x) {
                return x;
            }
        }
        x
    }

    /// `Φ_n(z)` by the Szegő recursion, with `α_{n−1} = e^{−i·boundary}`.
    pub fn characteristic(&self, z: Complex64) -> Complex64 {
        let mut phi = Complex64::new(1.0, 0.0);
        let mut phi_star = Complex64::new(1.0, 0.0);
        let last = Complex64::from_polar(1.0, -self.boundary_phase);
        for &a in self.coeffs.iter().chain(std::iter::once(&last)) {
            let next = z * phi - a.conj() * phi_star;
            phi_star -= a * z * phi;
            phi = next;
        }
        phi
    }
}

/// Straightforward Prüfer phase with one `atan2` per step.
pub fn prufer_phase_reference(coeffs: &[Complex64], theta: f64) -> f64 {
    let mut psi = theta;
    for &a in coeffs {
        let aw = a * Complex64::new(psi.cos(), psi.sin());
        psi = theta + psi + 2.0 * aw.im.atan2(1.0 - aw.re);
    }
    psi
}
