//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error,
//! 3 divergence detected.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{HeatError, Location, Result};
use crate::grid::Grid1D;
use crate::io::{render_svg_profile, save_timeseries_csv, write_frames, ConfigDocument};
use crate::material::builtin_material;
use crate::oracle::convergence_study;
use crate::simulate::{simulate, SimulationResult, SolverConfig};
use crate::stability::{check_stability, max_stable_dt, mesh_fourier_number, Stability};
use crate::verify::{run_equivalence, DEFAULT_CASES, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;

const EQUIVALENCE_TOL: f64 = 1e-9;
const ORDER_RANGE: (f64, f64) = (1.8, 2.2);
const SVG_MAX_PROFILES: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "heat1d",
    version,
    about = "Explicit finite-difference heat conduction in a 1-D rod"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one simulation and write the requested outputs.
    Simulate(SimulateArgs),
    /// Run the same rod setup for several materials and tabulate steady times.
    Compare(CompareArgs),
    /// Check the stepping engine against the closed-form references.
    Verify(VerifyArgs),
    /// Report the mesh Fourier number and stability verdict.
    Stability(StabilityArgs),
}

/// Settings shared by `simulate` and `compare`. Flags override the file.
#[derive(Debug, Args)]
struct SetupArgs {
    /// Configuration file (`key = value` lines)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Rod length
    #[arg(long, allow_hyphen_values = true)]
    length: Option<String>,
    /// Number of grid nodes
    #[arg(long)]
    nodes: Option<String>,
    /// Time step; derived from lambda = 0.4 when absent
    #[arg(long, allow_hyphen_values = true)]
    dt: Option<String>,
    /// End time
    #[arg(long, allow_hyphen_values = true)]
    t_end: Option<String>,
    /// Steps between stored frames
    #[arg(long)]
    sample_every: Option<String>,
    /// `dirichlet:<value>` or `neumann:<gradient>`
    #[arg(long, allow_hyphen_values = true)]
    bc_left: Option<String>,
    /// `dirichlet:<value>` or `neumann:<gradient>`
    #[arg(long, allow_hyphen_values = true)]
    bc_right: Option<String>,
    /// `spike:<v>@mid`, `spike:<v>@<index>`, `uniform:<v>` or `sine:<m>,<A>`
    #[arg(long, allow_hyphen_values = true)]
    ic: Option<String>,
    /// Steady-state threshold on the largest rate of change
    #[arg(long, allow_hyphen_values = true)]
    steady_eps: Option<String>,
}

impl SetupArgs {
    fn document(&self) -> Result<ConfigDocument> {
        let mut doc = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| HeatError::Io {
                    path: path.clone(),
                    source,
                })?;
                ConfigDocument::parse(&text).map_err(|e| match e {
                    HeatError::Parse { location, message } => HeatError::Parse {
                        location,
                        message: format!("{}: {message}", path.display()),
                    },
                    other => other,
                })?
            }
            None => ConfigDocument::default(),
        };
        let overrides = [
            ("rod.length", "length", &self.length),
            ("grid.nodes", "nodes", &self.nodes),
            ("time.dt", "dt", &self.dt),
            ("time.end", "t-end", &self.t_end),
            ("time.sample_every", "sample-every", &self.sample_every),
            ("bc.left", "bc-left", &self.bc_left),
            ("bc.right", "bc-right", &self.bc_right),
            ("ic", "ic", &self.ic),
            ("steady.eps", "steady-eps", &self.steady_eps),
        ];
        for (key, flag, value) in overrides {
            if let Some(v) = value {
                doc.set(key, v.trim(), Location::Flag(flag.into()))?;
            }
        }
        Ok(doc)
    }
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    setup: SetupArgs,
    /// Catalog material (aluminium, copper, mild-steel)
    #[arg(long)]
    material: Option<String>,
    /// Write the full time series as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write one CSV per stored frame into this directory
    #[arg(long)]
    frames: Option<PathBuf>,
    /// Write an SVG chart of selected profiles
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    setup: SetupArgs,
    /// Comma-separated catalog materials
    #[arg(long)]
    materials: String,
    /// Write the table as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Seed for the randomized equivalence cases
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of randomized equivalence cases
    #[arg(long, default_value_t = DEFAULT_CASES)]
    cases: usize,
    /// Node counts for the convergence study
    #[arg(long, value_delimiter = ',', default_values_t = vec![17usize, 33, 65])]
    grids: Vec<usize>,
}

#[derive(Debug, Args)]
struct StabilityArgs {
    /// Catalog material
    #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
    material: Option<String>,
    /// Diffusivity given directly
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 100.0, allow_hyphen_values = true)]
    length: f64,
    #[arg(long, default_value_t = 101)]
    nodes: usize,
    #[arg(long, allow_hyphen_values = true)]
    dt: f64,
}

/// Parses `args` (program name first) and runs the chosen subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_CONFIG,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Simulate(a) => cmd_simulate(&a, out, err),
        Command::Compare(a) => cmd_compare(&a, out),
        Command::Verify(a) => return cmd_verify(&a, out, err),
        Command::Stability(a) => cmd_stability(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}

fn summary_line(result: &SimulationResult) -> String {
    let steady = match result.steady_time {
        Some(t) => format!("{t:.3}"),
        None => "none".into(),
    };
    format!(
        "lambda={} stability={} steady_time={steady}",
        result.lambda, result.stability
    )
}

/// Up to `max` frame indices spread evenly, first and last included.
fn pick_frames(count: usize, max: usize) -> Vec<usize> {
    if count <= max {
        return (0..count).collect();
    }
    let mut picked: Vec<usize> = (0..max)
        .map(|i| ((i * (count - 1)) as f64 / (max - 1) as f64).round() as usize)
        .collect();
    picked.dedup();
    picked
}

fn cmd_simulate(args: &SimulateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut doc = args.setup.document()?;
    if let Some(m) = &args.material {
        doc.set("material", m.trim(), Location::Flag("material".into()))?;
    }
    let config = doc.build()?;
    let result = simulate(&config)?;
    let _ = writeln!(out, "{}", summary_line(&result));

    let grid = config.grid;
    if let Some(path) = &args.csv {
        save_timeseries_csv(&result, &grid, path)?;
    }
    if let Some(dir) = &args.frames {
        write_frames(&result, &grid, dir)?;
    }
    if let Some(path) = &args.svg {
        write_svg(&result, &grid, path)?;
    }

    if let Some(t) = result.diverged_at {
        let _ = writeln!(err, "diverged at t={t:.3} (lambda={})", result.lambda);
        return Ok(EXIT_DIVERGED);
    }
    Ok(EXIT_OK)
}

fn write_svg(result: &SimulationResult, grid: &Grid1D, path: &std::path::Path) -> Result<()> {
    let picks = pick_frames(result.frames.len(), SVG_MAX_PROFILES);
    let fields: Vec<_> = picks.iter().map(|&i| result.frames[i].clone()).collect();
    let labels: Vec<String> = fields.iter().map(|f| format!("t={:.1}", f.time)).collect();
    let svg = render_svg_profile(&fields, &labels, grid)?;
    std::fs::write(path, svg).map_err(|source| HeatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

struct CompareRow {
    material: String,
    alpha: f64,
    lambda: f64,
    steady: String,
}

fn cmd_compare(args: &CompareArgs, out: &mut dyn Write) -> Result<i32> {
    let materials: Vec<&str> = args
        .materials
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if materials.is_empty() {
        return Err(HeatError::Config(
            "--materials needs at least one name".into(),
        ));
    }
    let base = args.setup.document()?;
    let configs = materials
        .iter()
        .map(|m| {
            let mut doc = base.clone();
            doc.set("material", *m, Location::Flag("materials".into()))?;
            doc.build()
        })
        .collect::<Result<Vec<SolverConfig>>>()?;

    let results: Vec<Result<SimulationResult>> = std::thread::scope(|s| {
        let handles: Vec<_> = configs
            .iter()
            .map(|c| s.spawn(move || simulate(c)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("simulation thread panicked"))
            .collect()
    });

    let mut rows = Vec::with_capacity(configs.len());
    for (config, result) in configs.iter().zip(results) {
        let result = result?;
        let steady = match (result.diverged_at, result.steady_time) {
            (Some(_), _) => "diverged".to_string(),
            (None, Some(t)) => format!("{t:.3}"),
            (None, None) => ">t_end".to_string(),
        };
        rows.push(CompareRow {
            material: config.material.name.clone(),
            alpha: config.material.diffusivity(),
            lambda: result.lambda,
            steady,
        });
    }

    let width = rows
        .iter()
        .map(|r| r.material.len())
        .max()
        .unwrap_or(0)
        .max(8);
    let _ = writeln!(
        out,
        "{:<width$}  {:>12}  {:>10}  {:>12}",
        "material", "alpha", "lambda", "steady_time"
    );
    for r in &rows {
        let _ = writeln!(
            out,
            "{:<width$}  {:>12.6}  {:>10.6}  {:>12}",
            r.material, r.alpha, r.lambda, r.steady
        );
    }

    if let Some(path) = &args.csv {
        let mut text = String::from("material,alpha,lambda,steady_time\n");
        for r in &rows {
            let _ = writeln!(text, "{},{},{},{}", r.material, r.alpha, r.lambda, r.steady);
        }
        std::fs::write(path, text).map_err(|source| HeatError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut ok = true;

    match run_equivalence(args.seed, args.cases) {
        Ok(report) => {
            let max = report.max_deviation();
            let failures: Vec<_> = report.failures(EQUIVALENCE_TOL).collect();
            let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "equivalence: {verdict} (max {max:.1e}) seed={} cases={}",
                args.seed, args.cases
            );
            for (idx, case, dev) in failures {
                ok = false;
                let _ = writeln!(
                    err,
                    "equivalence case {idx} (seed {}): deviation {dev:e} with {case}",
                    args.seed
                );
            }
        }
        Err(e) => {
            ok = false;
            let _ = writeln!(err, "equivalence: error: {e}");
        }
    }

    let (alpha, length, mode, lambda) = (1.0, 1.0, 1, 0.25);
    let t_target = 0.1 * length * length / alpha;
    if args.grids.len() == 2 {
        let _ = writeln!(err, "warning: observed order from a two-point fit");
    }
    match convergence_study(alpha, length, mode, lambda, &args.grids, t_target) {
        Ok(study) => {
            let grids: Vec<String> = args.grids.iter().map(|n| n.to_string()).collect();
            let pass = study
                .observed_order
                .is_some_and(|p| (ORDER_RANGE.0..=ORDER_RANGE.1).contains(&p));
            ok &= pass;
            let order = study
                .observed_order
                .map_or_else(|| "n/a".to_string(), |p| format!("{p:.4}"));
            let _ = writeln!(
                out,
                "convergence: {} (order {order}) grids={}",
                if pass { "PASS" } else { "FAIL" },
                grids.join(",")
            );
            for p in &study.points {
                let _ = writeln!(
                    out,
                    "  nodes={} dx={:.6e} l2={:.6e} max={:.6e}",
                    p.nodes, p.dx, p.error.l2, p.error.max_abs
                );
            }
            if study.observed_order.is_none() {
                let _ = writeln!(
                    err,
                    "convergence: need at least two grids to estimate an order"
                );
            }
        }
        Err(e) => {
            ok = false;
            let _ = writeln!(err, "convergence: error: {e}");
        }
    }

    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn cmd_stability(args: &StabilityArgs, out: &mut dyn Write) -> Result<i32> {
    let alpha = match (&args.material, args.alpha) {
        (Some(name), _) => builtin_material(name)?.diffusivity(),
        (None, Some(a)) => a,
        (None, None) => return Err(HeatError::Config("give --material or --alpha".into())),
    };
    let grid = Grid1D::new(args.length, args.nodes)?;
    let lambda = mesh_fourier_number(alpha, args.dt, grid.dx())?;
    let verdict = check_stability(lambda)?;
    let _ = writeln!(out, "lambda={lambda} verdict={verdict}");
    if verdict == Stability::Unstable {
        let _ = writeln!(out, "max_stable_dt={}", max_stable_dt(alpha, grid.dx()));
    }
    Ok(EXIT_OK)
}
