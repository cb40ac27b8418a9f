//! `gaps`: sample extremal eigenphase spacings, run size sweeps and write
//! figure datasets.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use gaps::refdist::RefDensity;
use gaps::runner::{
    reproduce_figure, run_batch, run_scaling_sweep, run_selftest, with_workers, workers_from_env, write_fitline_csv,
    write_histogram_csv, write_reference_csv, write_scaling_csv, write_summary_json, ExperimentConfig, FigureId,
    FigureOptions, Rescaling, Scale, Statistic, Summary, SweepKind,
};
use gaps::stats::ks_distance;

#[derive(Parser)]
#[command(name = "gaps", version, about = "Extremal eigenphase spacings of circular random-matrix ensembles")]
#[command(after_help = "Set GAPS_THREADS to fix the number of worker threads (0 or unset: automatic).")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one ensemble and histogram a spacing statistic.
    Sample(SampleArgs),
    /// Mean minimal and maximal spacing across sizes, with scaling fits.
    Scaling(ScalingArgs),
    /// Write the datasets behind one figure.
    Figure(FigureArgs),
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Args)]
struct SampleArgs {
    /// cpe, coe, cue, qubits or qunits.
    #[arg(long)]
    ensemble: SweepKind,
    /// Matrix size N (cpe, coe, cue).
    #[arg(long, conflicts_with_all = ["k", "n"])]
    size: Option<usize>,
    /// Number of 2×2 factors (qubits).
    #[arg(long, conflicts_with = "n")]
    k: Option<usize>,
    /// Factor size of a two-factor product (qunits).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1 << 14)]
    reps: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// min, max, mth:M or nn.
    #[arg(long, default_value = "min")]
    stat: Statistic,
    /// none, xmin, ymin or zmax.
    #[arg(long, default_value = "none")]
    rescale: Rescaling,
    #[arg(long)]
    bins: Option<usize>,
    /// Histogram range as LO,HI.
    #[arg(long, value_parser = parse_range)]
    range: Option<(f64, f64)>,
    /// Reference density to compare against, e.g. min-cue4, xmin-beta2, gumbel.
    #[arg(long = "ref")]
    reference: Option<String>,
    /// Output files are PATH_hist.csv, PATH_summary.json and PATH_ref.csv.
    #[arg(long)]
    out_prefix: PathBuf,
}

#[derive(Args)]
struct ScalingArgs {
    #[arg(long)]
    ensemble: SweepKind,
    /// Size parameters: N, k or n depending on the ensemble.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1 << 14)]
    reps: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output files are PATH_scaling.csv, PATH_summary.json, PATH_min_fit.csv
    /// and PATH_max_fit.csv.
    #[arg(long)]
    out_prefix: PathBuf,
}

#[derive(Args)]
struct FigureArgs {
    /// fig1, fig2, fig3a, fig3b, fig4, fig5a, fig5b, fig6, fig7 or fig8.
    #[arg(long)]
    id: FigureId,
    #[arg(long, default_value = "desk")]
    scale: Scale,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the repetition count of every series.
    #[arg(long)]
    reps: Option<u64>,
    #[arg(long)]
    out_dir: PathBuf,
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(lo)?, num(hi)?))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn sample(args: SampleArgs) -> Result<()> {
    let param = match (args.ensemble, args.size, args.k, args.n) {
        (SweepKind::Cpe | SweepKind::Coe | SweepKind::Cue, Some(n), None, None) => n,
        (SweepKind::Qubits, None, Some(k), None) => k,
        (SweepKind::Qunits, None, None, Some(n)) => n,
        (kind, ..) => bail!(
            "{kind} takes {}",
            match kind {
                SweepKind::Qubits => "--k",
                SweepKind::Qunits => "--n",
                _ => "--size",
            }
        ),
    };
    let spec = args.ensemble.spec(param);
    let mut config = ExperimentConfig::new(spec.clone(), args.reps, args.seed, args.stat).with_rescaling(args.rescale);
    if let Some(bins) = args.bins {
        config = config.with_bins(bins);
    }
    if let Some((lo, hi)) = args.range {
        config = config.with_range(lo, hi);
    }
    let reference = args
        .reference
        .as_deref()
        .map(|name| RefDensity::by_name(name, Some(spec.size())))
        .transpose()?;

    let result = run_batch(&config)?;
    write_histogram_csv(&with_suffix(&args.out_prefix, "_hist.csv"), &result.histogram)?;
    let ks = reference.map(|r| ks_distance(&result.samples, |x| r.cdf(x)));
    if let Some(r) = reference {
        let edges = result.histogram.edges();
        let (lo, hi) = (edges[0], edges[edges.len() - 1]);
        write_reference_csv(&with_suffix(&args.out_prefix, "_ref.csv"), &r.curve(lo, hi, 201))?;
    }
    let summary = Summary {
        config: &result.config,
        mean: result.mean,
        variance: result.variance,
        n: result.count,
        fit: result.fit,
        reference: reference.map(|r| r.name()),
        ks,
    };
    write_summary_json(&with_suffix(&args.out_prefix, "_summary.json"), &summary)?;

    print!("{spec} {} over {} values: mean {:.6}", config.statistic, result.count, result.mean);
    if let Some(se) = result.standard_error() {
        print!(" ± {se:.6}");
    }
    if let (Some(r), Some(ks)) = (reference, ks) {
        print!(", KS vs {} {ks:.4}", r.name());
    }
    println!(" ({:.1} s)", result.elapsed.as_secs_f64());
    Ok(())
}

fn scaling(args: ScalingArgs) -> Result<()> {
    if args.sizes.len() < 2 {
        bail!("--sizes needs at least two values");
    }
    let result = run_scaling_sweep(args.ensemble, &args.sizes, args.reps, args.seed)?;
    let ns: Vec<usize> = result.rows.iter().map(|r| r.n).collect();
    write_scaling_csv(&with_suffix(&args.out_prefix, "_scaling.csv"), &result)?;
    write_summary_json(&with_suffix(&args.out_prefix, "_summary.json"), &result)?;
    let min_line: Vec<(usize, f64)> = ns.iter().map(|&n| (n, result.min_line(n))).collect();
    let max_line: Vec<(usize, f64)> = ns.iter().map(|&n| (n, result.max_line(n))).collect();
    write_fitline_csv(&with_suffix(&args.out_prefix, "_min_fit.csv"), &min_line)?;
    write_fitline_csv(&with_suffix(&args.out_prefix, "_max_fit.csv"), &max_line)?;

    println!("{:>8} {:>12} {:>12}", "N", "<s_min>", "<s_max>");
    for row in &result.rows {
        println!("{:>8} {:>12.6} {:>12.6}", row.n, row.mean_min, row.mean_max);
    }
    let max_what = if result.max_squared { "<s_max>^2" } else { "<s_max>" };
    println!("ln<s_min> vs ln N: slope {:.4}", result.min_fit.slope);
    println!("{max_what} vs ln N: slope {:.4}", result.max_fit.slope);
    Ok(())
}

fn figure(args: FigureArgs) -> Result<()> {
    let mut options = FigureOptions::new(args.scale, args.seed);
    if let Some(reps) = args.reps {
        options = options.with_reps(reps);
    }
    let fig = reproduce_figure(args.id, &options)?;
    let files = fig
        .write(&args.out_dir)
        .with_context(|| format!("writing {} into {}", args.id, args.out_dir.display()))?;
    for f in files {
        println!("{}", f.display());
    }
    Ok(())
}

fn selftest() -> Result<bool> {
    let report = run_selftest();
    for c in &report.checks {
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    let workers = workers_from_env()?;
    with_workers(workers, move || match cli.command {
        Command::Sample(a) => sample(a).map(|_| true),
        Command::Scaling(a) => scaling(a).map(|_| true),
        Command::Figure(a) => figure(a).map(|_| true),
        Command::Selftest => selftest(),
    })?
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
