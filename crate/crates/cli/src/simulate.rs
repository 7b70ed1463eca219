//! Numeric and enumerative jobs: CSV series, JSON manifest, optional
//! SVG plots.

use crate::output::RunWriter;
use crate::plot;
use anyhow::Result;
use num_traits::ToPrimitive;
use ordcalc::amplitudes::{checkerboard_evolve, gallery, penrose_count, Direction, Network};
use ordcalc::exact::{CMatrix, CRat};
use ordcalc::iterants::perm_decompose;
use ordcalc::walks::{
    brownian_ensemble, chaos_orbit, delta_grid, diffusion_evolve, em_lorentz_step,
    quantum_walk_evolve, sign_field_series, total_mass, variance_exact, Boundary, ChaosConfig,
    ComplexField1D, EmState, OrbitClass, SignSeries, WalkConfig,
};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;

pub struct SimOpts {
    pub k: f64,
    pub tau: f64,
    pub steps: usize,
    pub walkers: usize,
    pub seed: u64,
    pub horizon: usize,
    pub grid: usize,
    pub y0: f64,
    pub y1: f64,
    pub scan: Option<String>,
    pub network: Option<PathBuf>,
    pub out: PathBuf,
    pub plot: bool,
}

pub fn run(job: &str, opts: &SimOpts) -> Result<()> {
    match job {
        "brownian" => brownian(opts),
        "diffusion" => diffusion(opts),
        "qwalk" => qwalk(opts),
        "chaos" => chaos(opts),
        "signs" => signs(opts),
        "em" => em(opts),
        "checkerboard" => checkerboard(opts),
        "penrose" => penrose(opts),
        other => anyhow::bail!("unknown simulate job '{other}'"),
    }
}

fn brownian(opts: &SimOpts) -> Result<()> {
    let config = WalkConfig {
        k: opts.k,
        tau: opts.tau,
        steps: opts.steps,
        walkers: opts.walkers,
        seed: opts.seed,
    };
    let result = brownian_ensemble(&config)?;
    let mut csv = String::from("step,time,msd,mean\n");
    for (t, (msd, mean)) in result.msd.iter().zip(&result.mean).enumerate() {
        writeln!(csv, "{},{},{},{}", t + 1, (t + 1) as f64 * opts.tau, msd, mean)?;
    }
    let mut writer = RunWriter::new(&opts.out, "brownian")?;
    let csv_path = writer.write("brownian.csv", csv.as_bytes())?;
    if opts.plot {
        let points: Vec<(f64, f64)> = result
            .msd
            .iter()
            .enumerate()
            .map(|(t, m)| ((t + 1) as f64 * opts.tau, *m))
            .collect();
        writer.write(
            "brownian_msd.svg",
            plot::line_plot("mean squared displacement", &points).as_bytes(),
        )?;
    }
    let manifest = writer.finish(json!({
        "k": opts.k, "tau": opts.tau, "steps": opts.steps,
        "walkers": opts.walkers, "seed": opts.seed,
    }))?;
    println!(
        "fitted MSD slope = {:.6} (2C with C = k/2 predicts {})",
        result.fitted_slope, opts.k
    );
    println!("wrote {} and {}", csv_path.display(), manifest.display());
    Ok(())
}

fn diffusion(opts: &SimOpts) -> Result<()> {
    let size = opts.grid.max(3);
    let mut state = delta_grid(size, size / 2, Boundary::Periodic);
    let mut csv = String::from("step,mass,variance\n");
    for t in 0..=opts.steps {
        if t > 0 {
            state = diffusion_evolve(&state, 1);
        }
        writeln!(
            csv,
            "{},{},{}",
            t,
            total_mass(&state).to_f64().unwrap_or(f64::NAN),
            variance_exact(&state).to_f64().unwrap_or(f64::NAN)
        )?;
    }
    let profile: Vec<f64> = state
        .probs
        .iter()
        .map(|p| p.to_f64().unwrap_or(f64::NAN))
        .collect();
    let mut profile_csv = String::from("x,probability\n");
    for (x, p) in profile.iter().enumerate() {
        writeln!(profile_csv, "{x},{p}")?;
    }
    let mut writer = RunWriter::new(&opts.out, "diffusion")?;
    writer.write("diffusion.csv", csv.as_bytes())?;
    writer.write("diffusion_profile.csv", profile_csv.as_bytes())?;
    if opts.plot {
        let points: Vec<(f64, f64)> = profile
            .iter()
            .enumerate()
            .map(|(x, p)| (x as f64, *p))
            .collect();
        writer.write(
            "diffusion_profile.svg",
            plot::line_plot("probability after the final step", &points).as_bytes(),
        )?;
    }
    writer.finish(json!({
        "grid": size, "steps": opts.steps, "boundary": "periodic",
    }))?;
    println!(
        "diffused a delta for {} steps; final variance = {}",
        opts.steps,
        variance_exact(&state).to_f64().unwrap_or(f64::NAN)
    );
    Ok(())
}

fn qwalk(opts: &SimOpts) -> Result<()> {
    let n = opts.grid.max(8);
    let dx = (opts.k * opts.tau).sqrt();
    let initial = ComplexField1D::gaussian(n, n as f64 * dx / 2.0, 6.0 * dx, dx, opts.tau);
    let mut state = initial.clone();
    let mut csv = String::from("step,norm\n");
    writeln!(csv, "0,{}", state.norm_l2())?;
    for t in 1..=opts.steps {
        state = quantum_walk_evolve(&state, 1);
        writeln!(csv, "{},{}", t, state.norm_l2())?;
    }
    let mut profile_csv = String::from("x,re,im,prob\n");
    for (ix, v) in state.values.iter().enumerate() {
        writeln!(
            profile_csv,
            "{},{},{},{}",
            ix as f64 * dx,
            v.re,
            v.im,
            v.norm_sqr()
        )?;
    }
    let mut writer = RunWriter::new(&opts.out, "qwalk")?;
    writer.write("qwalk.csv", csv.as_bytes())?;
    writer.write("qwalk_profile.csv", profile_csv.as_bytes())?;
    if opts.plot {
        let points: Vec<(f64, f64)> = state
            .values
            .iter()
            .enumerate()
            .map(|(ix, v)| (ix as f64 * dx, v.norm_sqr()))
            .collect();
        writer.write(
            "qwalk_density.svg",
            plot::line_plot("|psi|^2 after the final step", &points).as_bytes(),
        )?;
    }
    writer.finish(json!({
        "grid": n, "steps": opts.steps, "k": opts.k, "tau": opts.tau,
    }))?;
    println!(
        "complex walk over {} steps; norm drift {:.3e} (stencil is not unitary)",
        opts.steps,
        (state.norm_l2() - initial.norm_l2()).abs()
    );
    Ok(())
}

fn chaos(opts: &SimOpts) -> Result<()> {
    if let Some(scan) = &opts.scan {
        return chaos_scan(opts, scan);
    }
    let config = ChaosConfig::new(opts.k, 1, vec![opts.y0, opts.y1], opts.steps);
    let orbit = chaos_orbit(&config)?;
    let mut csv = String::from("t,y\n");
    for (t, y) in orbit.values.iter().enumerate() {
        writeln!(csv, "{t},{y}")?;
    }
    let mut writer = RunWriter::new(&opts.out, "chaos")?;
    writer.write("chaos.csv", csv.as_bytes())?;
    if opts.plot {
        let points: Vec<(f64, f64)> = orbit
            .values
            .iter()
            .enumerate()
            .map(|(t, y)| (t as f64, *y))
            .collect();
        writer.write("chaos_orbit.svg", plot::line_plot("delay recursion orbit", &points).as_bytes())?;
    }
    writer.finish(json!({
        "k": opts.k, "y0": opts.y0, "y1": opts.y1, "steps": opts.steps,
    }))?;
    if orbit.values.len() <= 12 {
        for (t, y) in orbit.values.iter().enumerate().skip(2) {
            println!("y{t} = {y}");
        }
    }
    println!(
        "orbit class: {:?}; max defining residual {:.2e}",
        orbit.class, orbit.max_residual
    );
    Ok(())
}

fn chaos_scan(opts: &SimOpts, scan: &str) -> Result<()> {
    let parts: Vec<&str> = scan.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        anyhow::bail!("--scan expects lo:hi:count");
    };
    let lo: f64 = lo.parse()?;
    let hi: f64 = hi.parse()?;
    let count: usize = count.parse()?;
    let mut rows = Vec::new();
    for i in 0..count {
        let k = lo + (hi - lo) * i as f64 / (count.max(2) - 1) as f64;
        let config = ChaosConfig::new(k, 1, vec![opts.y0, opts.y1], opts.steps.max(400));
        if let Ok(orbit) = chaos_orbit(&config) {
            if matches!(orbit.class, OrbitClass::Bounded | OrbitClass::Periodic { .. }) {
                for y in orbit.values.iter().rev().take(40) {
                    rows.push((k, *y));
                }
            }
        }
    }
    let mut csv = String::from("k,y\n");
    for (k, y) in &rows {
        writeln!(csv, "{k},{y}")?;
    }
    let mut writer = RunWriter::new(&opts.out, "chaos_scan")?;
    writer.write("chaos_scan.csv", csv.as_bytes())?;
    if opts.plot {
        writer.write(
            "chaos_scan.svg",
            plot::scatter_plot("attractor samples over k", &rows).as_bytes(),
        )?;
    }
    writer.finish(json!({
        "scan": scan, "y0": opts.y0, "y1": opts.y1, "steps": opts.steps,
    }))?;
    println!("scanned {count} values of k, kept {} attractor samples", rows.len());
    Ok(())
}

fn signs(opts: &SimOpts) -> Result<()> {
    let series = SignSeries::random(opts.steps.max(2), opts.seed, opts.k);
    let result = sign_field_series(&series);
    let mut csv = String::from("t,e1,e2,e3,b1,b2,b3,x1,x2,x3\n");
    for t in 0..series.eps.len() {
        let e = series.eps[t];
        let b = if t + 1 < series.eps.len() {
            result.b[t]
        } else {
            [0, 0, 0]
        };
        let x = result.walk[t + 1];
        writeln!(
            csv,
            "{t},{},{},{},{},{},{},{},{},{}",
            e[0], e[1], e[2], b[0], b[1], b[2], x[0], x[1], x[2]
        )?;
    }
    let mut writer = RunWriter::new(&opts.out, "signs")?;
    writer.write("signs.csv", csv.as_bytes())?;
    writer.finish(json!({
        "steps": opts.steps, "seed": opts.seed, "k": opts.k,
    }))?;
    let nonzero = result.b.iter().filter(|b| b.iter().any(|&c| c != 0)).count();
    println!(
        "sign-vector walk of {} steps; {} of {} field samples nonzero",
        series.eps.len(),
        nonzero,
        result.b.len()
    );
    Ok(())
}

fn em(opts: &SimOpts) -> Result<()> {
    // pure magnetic default: perpendicularity survives every step
    let mut state = EmState::perpendicular(
        [0.0; 3],
        [1.0, 0.0, 0.0],
        [0.0; 3],
        [0.0, 0.0, opts.k.abs().min(1.0) * 0.2],
    )?;
    let mut csv = String::from("t,x1,x2,x3,v1,v2,v3,lambda,residual\n");
    let mut worst = 0.0f64;
    for t in 0..opts.steps {
        let step = em_lorentz_step(&state)?;
        writeln!(
            csv,
            "{t},{},{},{},{},{},{},{},{}",
            state.position[0],
            state.position[1],
            state.position[2],
            state.velocity[0],
            state.velocity[1],
            state.velocity[2],
            step.lambda,
            step.residual
        )?;
        worst = worst.max(step.residual);
        state = step.next;
    }
    let mut writer = RunWriter::new(&opts.out, "em")?;
    writer.write("em.csv", csv.as_bytes())?;
    writer.finish(json!({
        "steps": opts.steps, "b": [0.0, 0.0, opts.k.abs().min(1.0) * 0.2],
    }))?;
    println!(
        "ran {} Lorentz steps; worst field-reconstruction residual {:.2e}",
        opts.steps, worst
    );
    Ok(())
}

fn checkerboard(opts: &SimOpts) -> Result<()> {
    let lattice = checkerboard_evolve(Direction::Right, opts.horizon)?;
    let mut csv = String::from("a,b,re_l,im_l,re_r,im_r\n");
    for (a, b) in lattice.points() {
        let l = lattice.psi_l(a, b);
        let r = lattice.psi_r(a, b);
        writeln!(csv, "{a},{b},{},{},{},{}", l.re, l.im, r.re, r.im)?;
    }
    let mut writer = RunWriter::new(&opts.out, "checkerboard")?;
    writer.write("checkerboard.csv", csv.as_bytes())?;
    if opts.plot {
        let mut max_norm: f64 = 1.0;
        let cells: Vec<(usize, usize, f64)> = lattice
            .points()
            .map(|(a, b)| {
                let norm = lattice.psi_l(a, b).norm_sqr() + lattice.psi_r(a, b).norm_sqr();
                let intensity = (1.0 + norm).ln();
                max_norm = max_norm.max(intensity);
                (a, b, intensity)
            })
            .collect();
        let cells: Vec<(usize, usize, f64)> = cells
            .into_iter()
            .map(|(a, b, v)| (a, b, v / max_norm))
            .collect();
        writer.write(
            "checkerboard.svg",
            plot::lightcone_heat_map("log |psi|^2 over the lightcone", opts.horizon, &cells)
                .as_bytes(),
        )?;
    }
    writer.finish(json!({
        "horizon": opts.horizon, "source": "right",
    }))?;
    println!(
        "filled the lightcone to horizon {} ({} points)",
        opts.horizon,
        (opts.horizon + 1) * (opts.horizon + 2) / 2
    );
    Ok(())
}

fn penrose(opts: &SimOpts) -> Result<()> {
    let cap = 20_000_000;
    let cases: Vec<(String, Network)> = match &opts.network {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            vec![(
                path.file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "network".into()),
                Network::from_text(&text)?,
            )]
        }
        None => vec![
            ("theta".into(), gallery::theta()),
            ("k4".into(), gallery::k4()),
            ("prism".into(), gallery::prism()),
            ("cube".into(), gallery::cube()),
            ("bridged".into(), gallery::bridged()),
        ],
    };
    let mut csv = String::from("graph,z_re,z_im,proper_colorings,agrees\n");
    for (name, network) in &cases {
        let report = penrose_count(network, cap)?;
        writeln!(
            csv,
            "{name},{},{},{},{}",
            report.partition_value.re, report.partition_value.im, report.proper_colorings,
            report.agrees
        )?;
        println!(
            "{name}: Z = {}, proper 3-edge-colorings = {}, agree = {}",
            report.partition_value.re, report.proper_colorings, report.agrees
        );
    }
    let mut writer = RunWriter::new(&opts.out, "penrose")?;
    writer.write("penrose.csv", csv.as_bytes())?;
    writer.finish(json!({
        "graphs": cases.iter().map(|(name, _)| name.clone()).collect::<Vec<_>>(),
    }))?;
    Ok(())
}

fn parse_rational_cell(cell: &str) -> Result<CRat> {
    let cell = cell.trim();
    let parse_int = |s: &str| -> Result<i64> {
        s.parse()
            .map_err(|_| anyhow::anyhow!("bad matrix entry '{cell}'"))
    };
    if let Some((n, d)) = cell.split_once('/') {
        let d = parse_int(d)?;
        anyhow::ensure!(d != 0, "zero denominator in '{cell}'");
        Ok(ordcalc::exact::crat(parse_int(n)?, d))
    } else {
        Ok(ordcalc::exact::crat(parse_int(cell)?, 1))
    }
}

/// Read a square CSV matrix of rationals and write the JSON
/// permutation-diagonal decomposition report.
pub fn decompose(matrix: &std::path::Path, out: &std::path::Path) -> Result<()> {
    let text = std::fs::read_to_string(matrix)?;
    let rows: Vec<Vec<CRat>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| line.split(',').map(parse_rational_cell).collect())
        .collect::<Result<_>>()?;
    let n = rows.len();
    anyhow::ensure!(
        rows.iter().all(|r| r.len() == n),
        "matrix must be square"
    );
    let m = CMatrix::from_rows(rows);
    let components = perm_decompose(&m)?;
    let report = json!({
        "n": n,
        "prefactor": format!("1/{}!", n.saturating_sub(1)),
        "components": components
            .iter()
            .map(|c| json!({
                "perm": c.perm,
                "diag": c.diagonal.iter().map(|d| d.re.to_string()).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    });
    let mut writer = RunWriter::new(out, "decompose")?;
    let path = writer.write("decompose.json", serde_json::to_string_pretty(&report)?.as_bytes())?;
    writer.finish(json!({ "matrix": matrix.display().to_string(), "n": n }))?;
    println!(
        "decomposed a {n}x{n} matrix into {} components -> {}",
        components.len(),
        path.display()
    );
    Ok(())
}
