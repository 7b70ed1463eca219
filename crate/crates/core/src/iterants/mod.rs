//! Iterant algebra: ordered pairs with shift and polarity, the eta
//! extension that reproduces 2x2 matrix algebra (and the complex units
//! and quaternions inside it), Lorentz boosts as `[k, 1/k]` pairs, and
//! the permutation-diagonal decomposition of square matrices.

mod boost;
mod eta;
mod iterant;
mod perm;

pub use boost::{boost_apply_f64, velocity_addition, Boost, BoostError};
pub use eta::{quaternion_check, quaternions, EtaElement, QuaternionReport, QuaternionTriple};
pub use iterant::Iterant;
pub use perm::{
    perm_conjugation_check, perm_decompose, perm_reconstruct, PermComponent, PermError, PERM_CAP,
};
