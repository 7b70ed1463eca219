//! Thin wasm-bindgen surface over the ordcalc engine for the static
//! demo page in `www/`. Three interactive operations: normalize an
//! expression under a chosen rule set, evolve the complex three-point
//! walk, and fill the checkerboard lightcone.

use ordcalc::amplitudes::{checkerboard_evolve, Direction};
use ordcalc::ncalg::{normalize, parse, CommutationTable};
use ordcalc::walks::{quantum_walk_evolve, ComplexField1D};
use wasm_bindgen::prelude::wasm_bindgen;

fn table_by_name(name: &str) -> CommutationTable {
    match name {
        "flat" => CommutationTable::flat(),
        "commuting" => CommutationTable::commuting_series(),
        "gauge" => CommutationTable::gauge(false),
        "gauge-abelian" => CommutationTable::gauge(true),
        "metric" => CommutationTable::metric(true, false),
        _ => CommutationTable::free(),
    }
}

/// Parse and normalize an expression; returns the rendered normal form
/// or a message starting with `error:`.
#[wasm_bindgen]
pub fn eval_expression(src: &str, table: &str) -> String {
    let table = table_by_name(table);
    match parse(src) {
        Ok(expr) => match normalize(&expr, &table) {
            Ok(normal) => normal.to_string(),
            Err(err) => format!("error: {err}"),
        },
        Err(err) => format!("error: {err}"),
    }
}

/// `|psi|^2` after `steps` applications of the three-point stencil to
/// a Gaussian packet on a periodic grid of `n` sites.
#[wasm_bindgen]
pub fn quantum_walk_density(n: usize, steps: usize) -> Vec<f64> {
    let n = n.clamp(16, 2048);
    let field = initial_packet(n);
    quantum_walk_evolve(&field, steps.min(4000)).probability_density()
}

/// Relative L2 norm drift of the same run; the stencil is not unitary,
/// and the page reports this honestly.
#[wasm_bindgen]
pub fn quantum_walk_norm_drift(n: usize, steps: usize) -> f64 {
    let n = n.clamp(16, 2048);
    let field = initial_packet(n);
    let evolved = quantum_walk_evolve(&field, steps.min(4000));
    (evolved.norm_l2() - field.norm_l2()) / field.norm_l2()
}

fn initial_packet(n: usize) -> ComplexField1D {
    ComplexField1D::gaussian(n, n as f64 / 2.0, n as f64 / 24.0, 1.0, 1.0)
}

/// Flattened checkerboard intensities `log(1 + |psi_L|^2 + |psi_R|^2)`
/// in diagonal order (`(a+b) = 0, 1, ...`, `b` ascending inside each
/// diagonal), normalized to `[0, 1]`.
#[wasm_bindgen]
pub fn checkerboard_heat(horizon: usize) -> Vec<f64> {
    let horizon = horizon.min(40);
    let lattice = checkerboard_evolve(Direction::Right, horizon).expect("horizon capped");
    let mut values: Vec<f64> = lattice
        .points()
        .map(|(a, b)| {
            (1.0 + lattice.psi_l(a, b).norm_sqr() + lattice.psi_r(a, b).norm_sqr()).ln()
        })
        .collect();
    let max = values.iter().cloned().fold(1.0f64, f64::max);
    for v in &mut values {
        *v /= max;
    }
    values
}

/// Exact register values at one lattice point, rendered as text.
#[wasm_bindgen]
pub fn checkerboard_point(horizon: usize, a: usize, b: usize) -> String {
    let horizon = horizon.min(40);
    if a + b > horizon {
        return "outside the horizon".into();
    }
    let lattice = checkerboard_evolve(Direction::Right, horizon).expect("horizon capped");
    format!(
        "psi_L({a},{b}) = {}, psi_R({a},{b}) = {}",
        lattice.psi_l(a, b),
        lattice.psi_r(a, b)
    )
}
