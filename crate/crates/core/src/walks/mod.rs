//! Numeric simulators for the commutator equations: random walks and
//! diffusion, the complex three-point walk, delay-recursion orbits,
//! sign-vector fields, the discrete Lorentz-force step and the Planck
//! identities.

mod brownian;
mod chaos;
mod diffusion;
mod em;
mod planck;
mod qwalk;
mod rng;
mod signs;

pub use brownian::{brownian_ensemble, BrownianResult, WalkConfig, WalkError};
pub use chaos::{chaos_orbit, ChaosConfig, ChaosError, ChaosOrbit, OrbitClass};
pub use diffusion::{
    delta_grid, diffusion_evolve, diffusion_evolve_f64, mean_exact, total_mass, variance_exact,
    Boundary, DiffusionState,
};
pub use em::{em_lorentz_step, EmError, EmState, EmStep};
pub use planck::{compton_residual, planck_numbers, PlanckError, PlanckReport};
pub use qwalk::{quantum_walk_evolve, quantum_walk_step, ComplexField1D};
pub use rng::walker_rng;
pub use signs::{
    commuting_scalar_feasibility, cross_product_i64, sign_field_series, ScalarFeasibility,
    SignFieldResult, SignSeries,
};
