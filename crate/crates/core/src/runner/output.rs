//! On-disk formats read by the plotting scripts.
//!
//! * histogram CSV: `# gaps-histogram v1`, then `bin_left,bin_right,density,count`
//! * reference CSV: `x,pdf`
//! * scaling CSV: `# gaps-scaling v1`, then `param,n,mean_min,se_min,mean_max,se_max`
//! * fit-line CSV: `n,value`
//! * summary JSON: `{config, mean, variance, n, fit?}` plus optional extras
//!
//! Floats use Rust's shortest round-trip formatting, so equal values always
//! produce equal bytes.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{FitResult, Histogram};

use super::sweep::ScalingResult;

pub const HISTOGRAM_HEADER: &str = "# gaps-histogram v1";
pub const SCALING_HEADER: &str = "# gaps-scaling v1";

/// Summary JSON document. `config` is whatever configuration produced the
/// numbers; `n` is the number of values summarized.
#[derive(Debug, Clone, Serialize)]
pub struct Summary<C: Serialize> {
    pub config: C,
    pub mean: f64,
    pub variance: Option<f64>,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FitResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ks: Option<f64>,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    File::create(path).map(BufWriter::new).map_err(|e| Error::io(path, e))
}

fn write_all(path: &Path, body: &str) -> Result<()> {
    let mut w = create(path)?;
    w.write_all(body.as_bytes()).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

pub fn histogram_csv(h: &Histogram) -> String {
    let mut out = format!("{HISTOGRAM_HEADER}\nbin_left,bin_right,density,count\n");
    for ((w, d), c) in h.edges().windows(2).zip(h.density()).zip(h.counts()) {
        out.push_str(&format!("{},{},{},{}\n", w[0], w[1], d, c));
    }
    out
}

pub fn write_histogram_csv(path: &Path, h: &Histogram) -> Result<()> {
    write_all(path, &histogram_csv(h))
}

pub fn reference_csv(points: &[(f64, f64)]) -> String {
    let mut out = String::from("x,pdf\n");
    for (x, p) in points {
        out.push_str(&format!("{x},{p}\n"));
    }
    out
}

pub fn write_reference_csv(path: &Path, points: &[(f64, f64)]) -> Result<()> {
    write_all(path, &reference_csv(points))
}

pub fn scaling_csv(r: &ScalingResult) -> String {
    let mut out = format!("{SCALING_HEADER}\nparam,n,mean_min,se_min,mean_max,se_max\n");
    for row in &r.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.param, row.n, row.mean_min, row.se_min, row.mean_max, row.se_max
        ));
    }
    out
}

pub fn write_scaling_csv(path: &Path, r: &ScalingResult) -> Result<()> {
    write_all(path, &scaling_csv(r))
}

pub fn fitline_csv(points: &[(usize, f64)]) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in points {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

pub fn write_fitline_csv(path: &Path, points: &[(usize, f64)]) -> Result<()> {
    write_all(path, &fitline_csv(points))
}

pub fn write_summary_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut body = serde_json::to_string_pretty(value)?;
    body.push('\n');
    write_all(path, &body)
}
