//! The `stripzeros` command line: thin wrappers that read files, call the
//! library and write CSV.
//!
//! Exit codes: `0` on success, `2` for unreadable or malformed input, `3`
//! when a numerical precondition fails.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::blaschke_arg::{phi, phi_sum};
use crate::error::{Error, Result};
use crate::fmt17;
use crate::function_zoo::{
    count_claim_check, model_by_name, sine_type_model, shift_to_strip, write_zoo_csv, ZooModel,
};
use crate::hilbert_bmo::{
    bmo_estimate, hilbert_transform_sampled, load_sampled_csv, theorem_divergence_scan,
    write_sampled_csv, Grid, HilbertLogModel, SampledFunction, ScanConfig, ScanRow,
};
use crate::zero_model::{load_zero_set, upper_density_profile, StripPoint, ZeroSet};

#[derive(Debug, Parser)]
#[command(name = "stripzeros", version, about = "Zero sets in a strip: density, argument branches, Hilbert transform and BMO")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper uniform density profile of a zero set.
    Density(DensityArgs),
    /// Argument branch of one zero, or of a whole zero set, on a grid.
    Phi(PhiArgs),
    /// Regularized Hilbert transform of sampled data.
    Hilbert(HilbertArgs),
    /// Dyadic lower bound for the BMO norm of sampled data.
    Bmo(BmoArgs),
    /// Export the zeros of a generated model.
    Zoo(ZooArgs),
    /// Length-3 oscillation of H[log|F|] along a model family.
    VerifyTheorem(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file (standard output when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long)]
    pub zeros: PathBuf,
    /// Comma-separated, strictly increasing window lengths.
    #[arg(long, value_delimiter = ',', required = true)]
    pub radii: Vec<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    /// A single zero `x,y`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "zeros")]
    pub zero: Option<String>,
    /// A zero-set file; the output is the sum of the branches.
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    /// `t0:h:n`, with `n` the number of nodes.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: String,
    /// Sum only zeros with `|z| <= R`.
    #[arg(long)]
    pub truncation: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    /// Samples in the `t,value` format.
    #[arg(long, conflicts_with = "constant")]
    pub input: Option<PathBuf>,
    /// Transform the constant function with this value instead.
    #[arg(long = "const", allow_hyphen_values = true)]
    pub constant: Option<f64>,
    /// Grid for `--const`.
    #[arg(long, allow_hyphen_values = true, default_value = "-100:0.5:401")]
    pub grid: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BmoArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// `min:max` interval lengths of the dyadic family.
    #[arg(long)]
    pub lengths: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ZooArgs {
    /// One of sine, cluster, example1, example2.
    #[arg(long)]
    pub model: String,
    /// Truncation parameter of the model.
    #[arg(long = "K")]
    pub k: u64,
    /// Vertical shift applied to models with real zeros.
    #[arg(long, default_value_t = 1.0)]
    pub shift: f64,
    /// Write the unit-window count table of example2 instead of the zeros.
    #[arg(long)]
    pub counts: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub model: String,
    /// Comma-separated truncation parameters of the family.
    #[arg(long = "K", value_delimiter = ',', required = true)]
    pub k: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "5")]
    pub thresholds: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub shift: f64,
    /// Drop zeros farther than R from each probe (bounded, not ignored).
    #[arg(long)]
    pub truncation: Option<f64>,
    /// Width T of the indicator diagram (sine keeps 2 pi).
    #[arg(long)]
    pub width: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

/// Parses `t0:h:n`.
pub fn parse_grid(spec: &str) -> Result<Grid> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Input(format!("grid must be t0:h:n, got {spec:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let t0 = parts[0].trim().parse::<f64>().map_err(|_| bad())?;
    let h = parts[1].trim().parse::<f64>().map_err(|_| bad())?;
    let n = parts[2].trim().parse::<usize>().map_err(|_| bad())?;
    Grid::new(t0, h, n)
}

/// Parses `min:max`.
pub fn parse_lengths(spec: &str) -> Result<(f64, f64)> {
    let bad = || Error::Input(format!("lengths must be min:max, got {spec:?}"));
    let (a, b) = spec.split_once(':').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn sink(output: &Output) -> Result<Box<dyn Write>> {
    Ok(match &output.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Density(a) => density(a),
        Command::Phi(a) => phi_cmd(a),
        Command::Hilbert(a) => hilbert(a),
        Command::Bmo(a) => bmo(a),
        Command::Zoo(a) => zoo(a),
        Command::VerifyTheorem(a) => verify_theorem(a),
    }
}

fn density(a: DensityArgs) -> Result<()> {
    let zs = load_zero_set(open(&a.zeros)?)?;
    let profile = upper_density_profile(&zs, &a.radii)?;
    let mut out = sink(&a.output)?;
    writeln!(out, "r,sup_count,density,anchor")?;
    for e in &profile.entries {
        writeln!(out, "{},{},{},{}", e.r, e.count, fmt17(e.density), fmt17(e.anchor))?;
    }
    out.flush()?;
    Ok(())
}

fn phi_cmd(a: PhiArgs) -> Result<()> {
    let grid = parse_grid(&a.grid)?;
    let values: Vec<f64> = match (&a.zero, &a.zeros) {
        (Some(z), None) => {
            let (x, y) = z
                .split_once(',')
                .and_then(|(x, y)| Some((x.trim().parse().ok()?, y.trim().parse().ok()?)))
                .ok_or_else(|| Error::Input(format!("zero must be x,y, got {z:?}")))?;
            let p = StripPoint::new(x, y, 1)?;
            grid.nodes().map(|t| phi(&p, t).value).collect()
        }
        (None, Some(path)) => {
            let zs = load_zero_set(open(path)?)?;
            let r = a.truncation.unwrap_or(f64::INFINITY);
            grid.nodes()
                .map(|t| phi_sum(&zs, t, r).map(|s| s.value))
                .collect::<Result<_>>()?
        }
        _ => return Err(Error::Input("give either --zero x,y or --zeros PATH".into())),
    };
    let f = SampledFunction::new(grid.t0, grid.h, values)?;
    let mut out = sink(&a.output)?;
    write_sampled_csv(&f, &mut out)?;
    out.flush()?;
    Ok(())
}

fn hilbert(a: HilbertArgs) -> Result<()> {
    let f = match (&a.input, a.constant) {
        (Some(path), None) => load_sampled_csv(open(path)?)?,
        (None, Some(c)) => SampledFunction::constant(parse_grid(&a.grid)?, c)?,
        _ => return Err(Error::Input("give either --input PATH or --const c".into())),
    };
    let hf = hilbert_transform_sampled(&f)?;
    let mut out = sink(&a.output)?;
    write_sampled_csv(&hf, &mut out)?;
    out.flush()?;
    Ok(())
}

fn bmo(a: BmoArgs) -> Result<()> {
    let f = load_sampled_csv(open(&a.input)?)?;
    let (lo, hi) = parse_lengths(&a.lengths)?;
    let r = bmo_estimate(&f, lo, hi)?;
    let mut out = sink(&a.output)?;
    writeln!(out, "a,b,mean,oscillation")?;
    writeln!(out, "{},{},{},{}", fmt17(r.a), fmt17(r.b), fmt17(r.mean), fmt17(r.oscillation))?;
    out.flush()?;
    Ok(())
}

fn shifted(model: ZooModel, shift: f64) -> Result<ZooModel> {
    if model.shift > 0.0 {
        Ok(model)
    } else {
        shift_to_strip(&model, shift)
    }
}

fn zoo(a: ZooArgs) -> Result<()> {
    let model = shifted(model_by_name(&a.model, a.k)?, a.shift)?;
    let mut out = sink(&a.output)?;
    if a.counts {
        writeln!(out, "k,count,half_k,verdict,duplicates")?;
        for k in 2..=a.k {
            let c = count_claim_check(&model, k)?;
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{k},{},{},{verdict},{}", c.count, k as f64 / 2.0, c.duplicates.len())?;
        }
    } else {
        write_zoo_csv(&model, &mut out)?;
    }
    out.flush()?;
    Ok(())
}

/// Runs the length-3 scan over the models `name` at each truncation in
/// `ks`, probing where the largest member concentrates its zeros.
pub fn scan_family(
    name: &str,
    ks: &[u64],
    shift: f64,
    width: Option<f64>,
    cfg: &ScanConfig,
) -> Result<Vec<ScanRow>> {
    let mut family: Vec<(u64, HilbertLogModel)> = Vec::with_capacity(ks.len());
    let mut probes = Vec::new();
    let k_top = ks.iter().copied().max().ok_or_else(|| Error::Input("empty K list".into()))?;
    for &k in ks {
        let mut model = shifted(model_by_name(name, k)?, shift)?;
        if let Some(w) = width {
            model = model.with_width(w)?;
        }
        if k == k_top {
            probes = model.probes.clone();
        }
        family.push((k, model.hlf_model(0.0)?));
    }
    theorem_divergence_scan(&family, &probes, cfg)
}

fn verify_theorem(a: VerifyArgs) -> Result<()> {
    if a.thresholds.iter().any(|t| !(*t > 0.0)) || a.thresholds.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Input("thresholds must be positive and increasing".into()));
    }
    // validate the name before any numerical work
    model_by_name(&a.model, 2)?;
    let cfg = ScanConfig {
        truncation: a.truncation.unwrap_or(f64::INFINITY),
        ..ScanConfig::default()
    };
    let width = if a.model == "sine" { None } else { a.width };
    let rows = scan_family(&a.model, &a.k, a.shift, width, &cfg)?;

    let control_model = sine_type_model(1.0, 200)?;
    let control = theorem_divergence_scan(
        &[(200, control_model.hlf_model(0.0)?)],
        &control_model.probes,
        &cfg,
    )?[0];

    let mut out = sink(&a.output)?;
    writeln!(out, "K,bmo_lower_bound,witness_interval")?;
    for r in &rows {
        writeln!(
            out,
            "{},{},[{};{}]",
            r.k,
            fmt17(r.bound),
            fmt17(r.witness.0),
            fmt17(r.witness.1)
        )?;
    }
    out.flush()?;
    drop(out);

    let mut err = io::stderr().lock();
    for t in &a.thresholds {
        match rows.iter().find(|r| r.bound >= *t) {
            Some(r) => writeln!(err, "threshold {t}: crossed at K = {}", r.k)?,
            None => writeln!(err, "threshold {t}: not crossed")?,
        }
    }
    writeln!(
        err,
        "control sine-type N = 200: bound {:.6} ({})",
        control.bound,
        if a.thresholds.iter().any(|t| control.bound >= *t) {
            "crosses a threshold"
        } else {
            "below every threshold"
        }
    )?;

    if let Some(r) = rows.iter().find(|r| r.tail_bound > 0.01 * r.bound) {
        return Err(Error::Precondition(format!(
            "truncation too aggressive at K = {}: tail bound {} exceeds 1% of {}",
            r.k, r.tail_bound, r.bound
        )));
    }
    Ok(())
}

/// Zero set read from a path, used by the examples.
pub fn read_zero_set(path: &Path) -> Result<ZeroSet> {
    load_zero_set(open(path)?)
}
