use std::f64::consts::TAU;

use super::Spectrum;
use crate::error::{Error, Result};

/// Spectrum of `U_1 ⊗ … ⊗ U_k` from the factor spectra: every sum of one
/// phase per factor, reduced mod 2π, sorted.
///
/// Adding a fixed phase to a sorted spectrum only rotates it, so each factor
/// phase contributes a pre-sorted run and the runs are merged; no global sort
/// is needed.
pub fn tensor_spectrum(factors: &[Spectrum]) -> Result<Spectrum> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidInput("tensor product of zero factors".into()))?;
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::InvalidInput("tensor factor with no phases".into()));
    }
    factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.len()))
        .ok_or_else(|| Error::InvalidSize("tensor product size overflows".into()))?;

    let mut acc = first.phases().to_vec();
    for factor in rest {
        let mut runs: Vec<Vec<f64>> = factor.phases().iter().map(|&p| shifted_run(&acc, p)).collect();
        while runs.len() > 1 {
            runs = runs
                .chunks(2)
                .map(|pair| match pair {
                    [a, b] => merge(a, b),
                    [a] => a.clone(),
                    _ => unreachable!(),
                })
                .collect();
        }
        acc = runs.pop().expect("factor has at least one phase");
    }
    // Wrapped sums can land one ulp out of order; repair if so.
    if acc.windows(2).any(|w| w[0] > w[1]) {
        acc.sort_by(f64::total_cmp);
    }
    Ok(Spectrum::from_sorted_unchecked(acc))
}

#[inline]
fn add_phase(x: f64, p: f64) -> f64 {
    let s = x + p;
    if s >= TAU {
        s - TAU
    } else {
        s
    }
}

fn shifted_run(sorted: &[f64], p: f64) -> Vec<f64> {
    let split = sorted.partition_point(|&x| x + p < TAU);
    let mut out = Vec::with_capacity(sorted.len());
    out.extend(sorted[split..].iter().map(|&x| add_phase(x, p)));
    out.extend(sorted[..split].iter().map(|&x| add_phase(x, p)));
    out
}

fn merge(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
