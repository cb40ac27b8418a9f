//! Datasets behind each figure, at desk or paper scale.
//!
//! | id    | content                                                          |
//! |-------|------------------------------------------------------------------|
//! | fig1  | `P(s_min)` for CUE_4, CUE_2⊗CUE_2, CPE_4 with exact densities     |
//! | fig2  | `⟨s_min⟩` against N for CPE, COE, CUE                              |
//! | fig3a | `⟨s_max⟩` against N for COE, CUE                                   |
//! | fig3b | `⟨s_max⟩` against N for CPE                                        |
//! | fig4  | `P(s_min)` and `P(x_min)` at N = 100 for the three ensembles        |
//! | fig5a | `⟨s_min⟩` for CPE, two qunits and k qubits                          |
//! | fig5b | `⟨s_max⟩` for the same families                                    |
//! | fig6  | `P(y_min)` for CUE_n⊗CUE_n (n = 2, 3, 8) and CUE_2^{⊗k} (k = 2, 3, 8) |
//! | fig7  | `P(z_max)` for two qunits against the Gumbel law                  |
//! | fig8  | `P(z_max)` for k qubits against the Gumbel law                    |
//!
//! Desk scale: fig7 uses CUE_32⊗CUE_32 and fig8 k = 16; COE/CUE sweeps stop
//! at N = 256, qunit sweeps at n = 32 and qubit sweeps at k = 14.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ensembles::EnsembleSpec;
use crate::error::{Error, Result};
use crate::refdist::{mean_smax_prediction, mean_smin_prediction, RefDensity};
use crate::seed::SeedSpec;
use crate::stats::ks_distance;

use super::output::{
    write_fitline_csv, write_histogram_csv, write_reference_csv, write_scaling_csv, write_summary_json, Summary,
};
use super::sweep::{run_scaling_sweep, ScalingResult, SweepKind};
use super::{run_batch, ExperimentConfig, ExperimentResult, Rescaling, Statistic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3a,
    Fig3b,
    Fig4,
    Fig5a,
    Fig5b,
    Fig6,
    Fig7,
    Fig8,
}

impl FigureId {
    pub const ALL: [FigureId; 10] = [
        FigureId::Fig1,
        FigureId::Fig2,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig4,
        FigureId::Fig5a,
        FigureId::Fig5b,
        FigureId::Fig6,
        FigureId::Fig7,
        FigureId::Fig8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5a => "fig5a",
            FigureId::Fig5b => "fig5b",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
            FigureId::Fig8 => "fig8",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownFigure(s.to_string()))
    }
}

impl From<FigureId> for String {
    fn from(id: FigureId) -> Self {
        id.as_str().to_string()
    }
}

impl TryFrom<String> for FigureId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Paper,
    #[default]
    Desk,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Scale::Paper),
            "desk" => Ok(Scale::Desk),
            _ => Err(Error::InvalidParameter(format!("unknown scale `{s}` (paper, desk)"))),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Paper => "paper",
            Scale::Desk => "desk",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureOptions {
    pub scale: Scale,
    pub seed: u64,
    /// Overrides the scale's repetition count for every series.
    pub reps: Option<u64>,
}

impl FigureOptions {
    pub fn new(scale: Scale, seed: u64) -> Self {
        Self { scale, seed, reps: None }
    }

    pub fn with_reps(mut self, reps: u64) -> Self {
        self.reps = Some(reps);
        self
    }

    fn reps(&self, desk: u64, paper: u64) -> u64 {
        self.reps.unwrap_or(match self.scale {
            Scale::Desk => desk,
            Scale::Paper => paper,
        })
    }

    fn pick<T>(&self, desk: T, paper: T) -> T {
        match self.scale {
            Scale::Desk => desk,
            Scale::Paper => paper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axes {
    Linear,
    LogLog,
    LogLinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Empirical density, drawn as symbols.
    Histogram,
    /// Closed-form curve.
    Reference,
    /// Table of mean extremal spacings, drawn as symbols.
    Scaling,
    /// Straight line on the figure's axes.
    Fitline,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesData {
    Histogram {
        result: Box<ExperimentResult>,
        reference: Option<RefDensity>,
    },
    Reference(Vec<(f64, f64)>),
    /// A sweep; `column` is the scaling-CSV column the figure plots.
    Scaling {
        result: Box<ScalingResult>,
        column: &'static str,
    },
    FitLine(Vec<(usize, f64)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    /// File-name stem, unique within the figure.
    pub stem: String,
    pub label: String,
    pub data: SeriesData,
}

impl Series {
    pub fn role(&self) -> Role {
        match self.data {
            SeriesData::Histogram { .. } => Role::Histogram,
            SeriesData::Reference(_) => Role::Reference,
            SeriesData::Scaling { .. } => Role::Scaling,
            SeriesData::FitLine(_) => Role::Fitline,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub id: FigureId,
    pub scale: Scale,
    pub axes: Axes,
    pub series: Vec<Series>,
}

#[derive(Serialize)]
struct ManifestEntry {
    path: String,
    role: Role,
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<String>,
}

#[derive(Serialize)]
struct Manifest {
    figure: FigureId,
    scale: Scale,
    axes: Axes,
    series: Vec<ManifestEntry>,
}

impl Figure {
    pub fn histogram(&self, stem: &str) -> Option<&ExperimentResult> {
        self.series.iter().find_map(|s| match &s.data {
            SeriesData::Histogram { result, .. } if s.stem == stem => Some(result.as_ref()),
            _ => None,
        })
    }

    pub fn scaling(&self, stem: &str) -> Option<&ScalingResult> {
        self.series.iter().find_map(|s| match &s.data {
            SeriesData::Scaling { result, .. } if s.stem == stem => Some(result.as_ref()),
            _ => None,
        })
    }

    /// Write every series plus `<id>_manifest.json` into `dir`; returns the
    /// paths written, manifest last.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        let mut written = Vec::new();
        let mut entries = Vec::new();
        let name = |stem: &str, suffix: &str| format!("{}_{stem}_{suffix}", self.id);
        for s in &self.series {
            let (file, summary, column) = match &s.data {
                SeriesData::Histogram { result, reference } => {
                    let file = name(&s.stem, "hist.csv");
                    write_histogram_csv(&dir.join(&file), &result.histogram)?;
                    let summary_file = name(&s.stem, "summary.json");
                    let summary = Summary {
                        config: &result.config,
                        mean: result.mean,
                        variance: result.variance,
                        n: result.count,
                        fit: result.fit,
                        reference: reference.map(|r| r.name()),
                        ks: reference.map(|r| ks_distance(&result.samples, |x| r.cdf(x))),
                    };
                    write_summary_json(&dir.join(&summary_file), &summary)?;
                    written.push(dir.join(&file));
                    written.push(dir.join(&summary_file));
                    (file, Some(summary_file), None)
                }
                SeriesData::Reference(points) => {
                    let file = name(&s.stem, "ref.csv");
                    write_reference_csv(&dir.join(&file), points)?;
                    written.push(dir.join(&file));
                    (file, None, None)
                }
                SeriesData::Scaling { result, column } => {
                    let file = name(&s.stem, "scaling.csv");
                    write_scaling_csv(&dir.join(&file), result)?;
                    let summary_file = name(&s.stem, "summary.json");
                    write_summary_json(&dir.join(&summary_file), result.as_ref())?;
                    written.push(dir.join(&file));
                    written.push(dir.join(&summary_file));
                    (file, Some(summary_file), Some(*column))
                }
                SeriesData::FitLine(points) => {
                    let file = name(&s.stem, "fit.csv");
                    write_fitline_csv(&dir.join(&file), points)?;
                    written.push(dir.join(&file));
                    (file, None, None)
                }
            };
            entries.push(ManifestEntry {
                path: file,
                role: s.role(),
                label: s.label.clone(),
                column,
                summary,
            });
        }
        let manifest = Manifest {
            figure: self.id,
            scale: self.scale,
            axes: self.axes,
            series: entries,
        };
        let path = dir.join(format!("{}_manifest.json", self.id));
        write_summary_json(&path, &manifest)?;
        written.push(path);
        Ok(written)
    }
}

/// Compute the datasets of one figure.
pub fn reproduce_figure(id: FigureId, options: &FigureOptions) -> Result<Figure> {
    let mut b = Builder::new(id, options);
    match id {
        FigureId::Fig1 => fig1(&mut b)?,
        FigureId::Fig2 => fig2(&mut b)?,
        FigureId::Fig3a => fig3a(&mut b)?,
        FigureId::Fig3b => fig3b(&mut b)?,
        FigureId::Fig4 => fig4(&mut b)?,
        FigureId::Fig5a => fig5(&mut b, true)?,
        FigureId::Fig5b => fig5(&mut b, false)?,
        FigureId::Fig6 => fig6(&mut b)?,
        FigureId::Fig7 => gumbel_figure(&mut b, EnsembleSpec::qunits(options.pick(32, 64)), 1 << 14, 1 << 16)?,
        FigureId::Fig8 => gumbel_figure(&mut b, EnsembleSpec::qubits(options.pick(16, 22)), 1 << 14, 100_000)?,
    }
    Ok(b.finish())
}

/// Points per reference curve.
const CURVE_POINTS: usize = 201;

struct Builder<'a> {
    id: FigureId,
    options: &'a FigureOptions,
    axes: Axes,
    series: Vec<Series>,
}

impl<'a> Builder<'a> {
    fn new(id: FigureId, options: &'a FigureOptions) -> Self {
        Self {
            id,
            options,
            axes: Axes::Linear,
            series: Vec::new(),
        }
    }

    fn finish(self) -> Figure {
        Figure {
            id: self.id,
            scale: self.options.scale,
            axes: self.axes,
            series: self.series,
        }
    }

    /// Master seed of one histogram series, derived from the figure seed and
    /// the series stem.
    fn series_seed(&self, stem: &str) -> u64 {
        SeedSpec::derive_master(self.options.seed, fnv1a(stem))
    }

    fn config(&self, stem: &str, ensemble: EnsembleSpec, reps: u64, statistic: Statistic) -> ExperimentConfig {
        ExperimentConfig::new(ensemble, reps, self.series_seed(stem), statistic)
    }

    fn histogram(&mut self, stem: &str, label: String, result: ExperimentResult, reference: Option<RefDensity>) {
        self.series.push(Series {
            stem: stem.to_string(),
            label,
            data: SeriesData::Histogram {
                result: Box::new(result),
                reference,
            },
        });
    }

    fn reference(&mut self, r: RefDensity, lo: f64, hi: f64) {
        self.series.push(Series {
            stem: r.name(),
            label: r.description(),
            data: SeriesData::Reference(r.curve(lo, hi, CURVE_POINTS)),
        });
    }

    fn sweep(&mut self, kind: SweepKind, params: &[usize], reps: u64, column: &'static str) -> Result<ScalingResult> {
        let result = run_scaling_sweep(kind, params, reps, self.options.seed)?;
        self.series.push(Series {
            stem: kind.to_string(),
            label: label_of(kind),
            data: SeriesData::Scaling {
                result: Box::new(result.clone()),
                column,
            },
        });
        Ok(result)
    }

    fn line(&mut self, stem: String, label: String, points: Vec<(usize, f64)>) {
        self.series.push(Series {
            stem,
            label,
            data: SeriesData::FitLine(points),
        });
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

fn label_of(kind: SweepKind) -> String {
    match kind {
        SweepKind::Cpe => "CPE_N",
        SweepKind::Coe => "COE_N",
        SweepKind::Cue => "CUE_N",
        SweepKind::Qubits => "CUE_2^k",
        SweepKind::Qunits => "CUE_n x CUE_n",
    }
    .to_string()
}

fn beta_of(kind: SweepKind) -> Option<u8> {
    match kind {
        SweepKind::Cpe => Some(0),
        SweepKind::Coe => Some(1),
        SweepKind::Cue => Some(2),
        _ => None,
    }
}

fn powers_of_two(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|m| 1usize << m).collect()
}

fn fig1(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 14, 1 << 14);
    let cases = [
        ("cue4", "CUE_4", EnsembleSpec::Cue { n: 4 }, RefDensity::MinCue4),
        ("cue2x2", "CUE_2 x CUE_2", EnsembleSpec::qubits(2), RefDensity::MinCue2x2),
        ("cpe4", "CPE_4", EnsembleSpec::Cpe { n: 4 }, RefDensity::MinCpe4),
    ];
    for (stem, label, spec, reference) in cases.iter().cloned() {
        let cfg = b.config(stem, spec, reps, Statistic::Min).with_range(0.0, 1.0);
        let result = run_batch(&cfg)?;
        b.histogram(stem, label.to_string(), result, Some(reference));
    }
    for (_, _, _, reference) in cases {
        b.reference(reference, 0.0, 1.0);
    }
    Ok(())
}

fn min_panel(b: &mut Builder, kinds: &[(SweepKind, Vec<usize>)], reps: u64) -> Result<()> {
    b.axes = Axes::LogLog;
    for (kind, params) in kinds {
        let r = b.sweep(*kind, params, reps, "mean_min")?;
        let ns: Vec<usize> = r.rows.iter().map(|row| row.n).collect();
        b.line(
            format!("{kind}_min"),
            format!("{} fit, slope {:.3}", label_of(*kind), r.min_fit.slope),
            ns.iter().map(|&n| (n, r.min_line(n))).collect(),
        );
        if let Some(beta) = beta_of(*kind) {
            b.line(
                format!("{kind}_min_prediction"),
                format!("N^(-1/{})", beta + 1),
                ns.iter().map(|&n| Ok((n, mean_smin_prediction(n, beta)?))).collect::<Result<_>>()?,
            );
        }
    }
    Ok(())
}

fn max_panel(b: &mut Builder, kinds: &[(SweepKind, Vec<usize>)], reps: u64) -> Result<()> {
    b.axes = Axes::LogLinear;
    for (kind, params) in kinds {
        let r = b.sweep(*kind, params, reps, "mean_max")?;
        let ns: Vec<usize> = r.rows.iter().map(|row| row.n).collect();
        let what = if r.max_squared { "<s_max>^2" } else { "<s_max>" };
        b.line(
            format!("{kind}_max"),
            format!("{} fit, {what} slope {:.3}", label_of(*kind), r.max_fit.slope),
            ns.iter().map(|&n| (n, r.max_line(n))).collect(),
        );
        if let Some(beta) = beta_of(*kind) {
            b.line(
                format!("{kind}_max_prediction"),
                format!("{} prediction", label_of(*kind)),
                ns.iter().map(|&n| Ok((n, mean_smax_prediction(n, beta)?))).collect::<Result<_>>()?,
            );
        }
    }
    Ok(())
}

fn fig2(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 13, 1 << 14);
    let sizes = powers_of_two(1, 7);
    let kinds = [SweepKind::Cpe, SweepKind::Coe, SweepKind::Cue].map(|k| (k, sizes.clone()));
    min_panel(b, &kinds, reps)
}

fn fig3a(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 13, 1 << 14);
    let sizes = powers_of_two(1, b.options.pick(8, 10));
    let kinds = [SweepKind::Cue, SweepKind::Coe].map(|k| (k, sizes.clone()));
    max_panel(b, &kinds, reps)
}

fn fig3b(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 13, 1 << 14);
    max_panel(b, &[(SweepKind::Cpe, powers_of_two(1, 10))], reps)
}

fn fig4(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 15, 1 << 17);
    let n = 100;
    let cases = [
        ("cue", "CUE_100", EnsembleSpec::Cue { n }, 2u8),
        ("coe", "COE_100", EnsembleSpec::Coe { n }, 1),
        ("cpe", "CPE_100", EnsembleSpec::Cpe { n }, 0),
    ];
    for (stem, label, spec, beta) in cases {
        let raw = run_batch(&b.config(stem, spec, reps, Statistic::Min))?;
        let smin = RefDensity::SMin { beta, n };
        let xmin = RefDensity::XMin { beta };
        let scaled = raw.rescaled(Rescaling::Xmin)?;
        let (raw_hi, x_hi) = (hist_top(&raw), hist_top(&scaled));
        b.histogram(&format!("{stem}_smin"), format!("{label}, s_min"), raw, Some(smin));
        b.histogram(&format!("{stem}_xmin"), format!("{label}, x_min"), scaled, Some(xmin));
        b.series.push(Series {
            stem: format!("{stem}_smin_curve"),
            label: smin.description(),
            data: SeriesData::Reference(smin.curve(0.0, raw_hi, CURVE_POINTS)),
        });
        b.series.push(Series {
            stem: format!("{stem}_xmin_curve"),
            label: xmin.description(),
            data: SeriesData::Reference(xmin.curve(0.0, x_hi, CURVE_POINTS)),
        });
    }
    Ok(())
}

fn hist_top(r: &ExperimentResult) -> f64 {
    *r.histogram.edges().last().expect("histograms have edges")
}

fn fig5(b: &mut Builder, minimum: bool) -> Result<()> {
    let reps = b.options.reps(1 << 12, 1 << 14);
    let kinds = [
        (SweepKind::Cpe, powers_of_two(1, 10)),
        (SweepKind::Qunits, (2..=b.options.pick(32, 64)).collect()),
        (SweepKind::Qubits, (2..=b.options.pick(14, 20)).collect()),
    ];
    if minimum {
        min_panel(b, &kinds, reps)
    } else {
        max_panel(b, &kinds, reps)
    }
}

fn fig6(b: &mut Builder) -> Result<()> {
    let reps = b.options.reps(1 << 13, 1 << 14);
    let mut top: f64 = 0.0;
    let cases = [
        ("qunits2", "CUE_2 x CUE_2", EnsembleSpec::qunits(2)),
        ("qunits3", "CUE_3 x CUE_3", EnsembleSpec::qunits(3)),
        ("qunits8", "CUE_8 x CUE_8", EnsembleSpec::qunits(8)),
        ("qubits2", "CUE_2^2", EnsembleSpec::qubits(2)),
        ("qubits3", "CUE_2^3", EnsembleSpec::qubits(3)),
        ("qubits8", "CUE_2^8", EnsembleSpec::qubits(8)),
    ];
    for (stem, label, spec) in cases {
        let reference = if spec.size() == 4 {
            RefDensity::YMinCue2x2
        } else {
            RefDensity::Exponential
        };
        let cfg = b.config(stem, spec, reps, Statistic::Min).with_rescaling(Rescaling::Ymin);
        let result = run_batch(&cfg)?;
        top = top.max(hist_top(&result));
        b.histogram(stem, label.to_string(), result, Some(reference));
    }
    b.reference(RefDensity::Exponential, 0.0, top);
    b.reference(RefDensity::YMinCue2x2, 0.0, top);
    Ok(())
}

fn gumbel_figure(b: &mut Builder, spec: EnsembleSpec, desk_reps: u64, paper_reps: u64) -> Result<()> {
    let reps = b.options.reps(desk_reps, paper_reps);
    let stem = "zmax";
    let label = format!("{spec}, z_max");
    let cfg = b.config(stem, spec, reps, Statistic::Max).with_rescaling(Rescaling::Zmax);
    let result = run_batch(&cfg)?;
    b.histogram(stem, label, result, Some(RefDensity::Gumbel));
    b.reference(RefDensity::Gumbel, -4.0, 8.0);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.as_str().parse::<FigureId>().unwrap(), id);
        }
        assert!(matches!("fig9".parse::<FigureId>(), Err(Error::UnknownFigure(_))));
        assert_eq!("paper".parse::<Scale>().unwrap(), Scale::Paper);
        assert!("laptop".parse::<Scale>().is_err());
    }

    #[test]
    fn fig1_small_run_writes_three_histograms_and_curves() {
        let opts = FigureOptions::new(Scale::Desk, 3).with_reps(200);
        let fig = reproduce_figure(FigureId::Fig1, &opts).unwrap();
        let roles: Vec<Role> = fig.series.iter().map(Series::role).collect();
        assert_eq!(roles.iter().filter(|r| **r == Role::Histogram).count(), 3);
        assert_eq!(roles.iter().filter(|r| **r == Role::Reference).count(), 3);
        assert_eq!(fig.histogram("cue4").unwrap().count, 200);

        let dir = tempfile::tempdir().unwrap();
        let files = fig.write(dir.path()).unwrap();
        assert_eq!(files.len(), 3 * 2 + 3 + 1);
        assert!(files.iter().all(|f| f.exists()));
        let manifest: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("fig1_manifest.json")).unwrap()).unwrap();
        assert_eq!(manifest["figure"], "fig1");
        assert_eq!(manifest["series"].as_array().unwrap().len(), 6);
        assert_eq!(manifest["series"][0]["path"], "fig1_cue4_hist.csv");
    }

    #[test]
    fn series_seeds_differ_by_stem() {
        let opts = FigureOptions::new(Scale::Desk, 3);
        let b = Builder::new(FigureId::Fig6, &opts);
        assert_ne!(b.series_seed("qunits2"), b.series_seed("qubits2"));
        assert_eq!(fnv1a(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn sweep_figure_has_fits_and_predictions() {
        let opts = FigureOptions::new(Scale::Desk, 1).with_reps(40);
        let fig = reproduce_figure(FigureId::Fig2, &opts).unwrap();
        assert_eq!(fig.axes, Axes::LogLog);
        let cue = fig.scaling("cue").unwrap();
        assert_eq!(cue.rows.len(), 7);
        assert_eq!(fig.series.iter().filter(|s| s.role() == Role::Fitline).count(), 6);
    }
}
