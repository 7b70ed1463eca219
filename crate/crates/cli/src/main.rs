mod output;
mod plot;
mod simulate;
mod verify;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use ordcalc::ncalg::{normalize, parse, CommutationTable};
use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ordcalc",
    version,
    about = "Ordered-calculus engine: symbolic verifications, walk simulators, lattice amplitudes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonOpts {
    /// Output directory (default: $ORDCALC_OUT_DIR or ./out)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write SVG plots
    #[arg(long, global = true)]
    plot: bool,
    /// Flat key=value file supplying defaults for the flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression, normalize it under a table and print it
    Eval {
        expr: String,
        /// Rule set: free | flat | commuting | gauge | gauge-abelian |
        /// metric | metric-asym | metric-constant
        #[arg(long, default_value = "free")]
        table: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a symbolic verification suite (exit 1 on failure)
    Verify {
        /// leibniz | xdx | gauge-curvature | levi-civita | bianchi |
        /// metric-symmetry | lorentz-force | poisson | iterant-matrix |
        /// quaternions | perm-theorem | all
        suite: String,
        #[arg(long)]
        dim: Option<u8>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of randomized cases where applicable
        #[arg(long)]
        cases: Option<usize>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a numeric or enumerative job, writing CSV plus a manifest
    Simulate {
        /// brownian | diffusion | qwalk | chaos | signs | em |
        /// checkerboard | penrose
        job: String,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        walkers: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        horizon: Option<usize>,
        /// Grid size for diffusion / qwalk
        #[arg(long)]
        grid: Option<usize>,
        /// First initial value for the chaos recursion
        #[arg(long)]
        y0: Option<f64>,
        /// Second initial value for the chaos recursion
        #[arg(long)]
        y1: Option<f64>,
        /// Bifurcation scan "lo:hi:count" over k (chaos only)
        #[arg(long)]
        scan: Option<String>,
        /// Network description file (penrose only; default: the
        /// built-in cubic planar gallery)
        #[arg(long)]
        network: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decompose a square matrix (CSV of rationals) into its
    /// permutation-diagonal components, writing a JSON report
    Decompose {
        matrix: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the Planck numbers and their identity residuals
    Planck {
        #[arg(long, default_value_t = 1.054_571_817e-34)]
        hbar: f64,
        #[arg(long, default_value_t = 2.997_924_58e8)]
        c: f64,
        #[arg(long, default_value_t = 6.674_30e-11)]
        g: f64,
    },
}

/// Flat key=value defaults, lowest precedence under explicit flags.
pub struct Config(HashMap<String, String>);

impl Config {
    fn load(path: Option<&PathBuf>) -> Result<Config> {
        let mut map = HashMap::new();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)?;
            for line in text.lines() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    anyhow::bail!("bad config line (expected key=value): {line}");
                };
                map.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        Ok(Config(map))
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str, cli: Option<T>, default: T) -> T {
        if let Some(v) = cli {
            return v;
        }
        self.0
            .get(key)
            .and_then(|s| s.parse().ok())
            .unwrap_or(default)
    }
}

fn lookup_table(name: &str) -> Result<CommutationTable> {
    Ok(match name {
        "free" => CommutationTable::free(),
        "flat" => CommutationTable::flat(),
        "commuting" => CommutationTable::commuting_series(),
        "gauge" => CommutationTable::gauge(false),
        "gauge-abelian" => CommutationTable::gauge(true),
        "metric" => CommutationTable::metric(true, false),
        "metric-asym" => CommutationTable::metric(false, false),
        "metric-constant" => CommutationTable::metric(true, true),
        other => anyhow::bail!("unknown table '{other}'"),
    })
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            expr,
            table,
            common,
        } => {
            let _ = Config::load(common.config.as_ref())?;
            let table = lookup_table(&table)?;
            let parsed = parse(&expr)?;
            let normal = normalize(&parsed, &table)?;
            println!("{normal}");
            Ok(true)
        }
        Command::Verify {
            suite,
            dim,
            seed,
            cases,
            common,
        } => {
            let config = Config::load(common.config.as_ref())?;
            let dim = config.get("dim", dim, 3);
            let seed = config.get("seed", seed, 7);
            let cases = config.get("cases", cases, 200);
            verify::run(&suite, dim, seed, cases)
        }
        Command::Simulate {
            job,
            k,
            tau,
            steps,
            walkers,
            seed,
            horizon,
            grid,
            y0,
            y1,
            scan,
            network,
            common,
        } => {
            let config = Config::load(common.config.as_ref())?;
            let opts = simulate::SimOpts {
                k: config.get("k", k, 1.0),
                tau: config.get("tau", tau, 1.0),
                steps: config.get("steps", steps, 200),
                walkers: config.get("walkers", walkers, 2000),
                seed: config.get("seed", seed, 7),
                horizon: config.get("horizon", horizon, 12),
                grid: config.get("grid", grid, 201),
                y0: config.get("y0", y0, 1.0),
                y1: config.get("y1", y1, 3.0),
                scan: scan.or_else(|| config.0.get("scan").cloned()),
                network,
                out: output::out_dir(common.out.as_ref()),
                plot: common.plot || config.get("plot", None::<bool>, false),
            };
            simulate::run(&job, &opts)?;
            Ok(true)
        }
        Command::Decompose { matrix, common } => {
            simulate::decompose(&matrix, &output::out_dir(common.out.as_ref()))?;
            Ok(true)
        }
        Command::Planck { hbar, c, g } => {
            let report = ordcalc::walks::planck_numbers(hbar, c, g)?;
            println!("M = {:.12e}", report.mass);
            println!("L = {:.12e}", report.length);
            println!("T = {:.12e}", report.time);
            println!("L^2/T residual = {:.3e}", report.ratio_residual);
            println!("Jones mass M/2 = {:.12e}", report.jones_mass);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
