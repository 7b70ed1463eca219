//! Symbolic backgrounds, curvature and connection derivations, and the
//! Poisson-bracket classicization.

mod background;
mod christoffel;
mod multipoly;
mod ops;
mod poisson;

pub use background::{BackgroundKind, BackgroundSpec, GeometryError};
pub use christoffel::{
    christoffel_numeric, lagrangian_bracket_check, parallel_invariance_check, Christoffel,
    LagrangianBracketReport, MetricError, MetricField,
};
pub use multipoly::{MultiPoly, PolyParseError};
pub use ops::{
    bianchi_cyclic, curvature_operator, field_strength, formal_d, gauge_curvature, jacobi_cyclic,
    levi_civita_expected, levi_civita_index_free, levi_civita_nested, lorentz_force_consistency,
    metric_gradient, metric_symmetry, LorentzForceReport, MetricSymmetryReport,
};
pub use poisson::{
    defect_closed_form, poisson_bracket, poisson_leibniz_defect, scale, Flow, PhaseFunction,
};

use crate::exact::Rat;
use num_traits::ToPrimitive;

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
