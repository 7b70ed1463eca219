//! ordcalc: an exact engine for discrete ordered calculus.
//!
//! The crate has three layers:
//!
//! * [`ncalg`] is a non-commutative polynomial algebra over Gaussian
//!   rationals with a formal time-shift element `J` (`ZJ = JZ'`) and
//!   rule-driven normal ordering. [`doc`] and [`geometry`] build the
//!   commutator calculus on top of it: the derivative `DX = [X, J]`,
//!   gauge curvature, the metric/Levi-Civita derivations and the
//!   Poisson-bracket classicization.
//! * [`walks`] holds the numeric simulators that realize the commutator
//!   equations: Brownian ensembles, the finite-difference diffusion and
//!   complex three-point walk, the delay-recursion orbits, sign-vector
//!   fields and the discrete Lorentz-force step.
//! * [`amplitudes`] and [`iterants`] cover the combinatorial side:
//!   colored-network partition functions, the lightcone checkerboard
//!   recursion with its path-sum oracle, and the ordered-pair algebra
//!   that reconstructs 2x2 matrices, quaternions and Lorentz boosts.
//!
//! All symbolic and lattice arithmetic is exact; floating point only
//! appears in the explicitly numeric simulators.

pub mod amplitudes;
pub mod doc;
pub mod exact;
pub mod geometry;
pub mod iterants;
pub mod ncalg;
pub mod walks;
