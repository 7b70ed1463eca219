//! Exact scalar and matrix arithmetic shared across the crate.

mod matrix;
mod scalar;

pub use matrix::CMatrix;
pub use scalar::{crat, crat_i, crat_q, CRat, GaussInt, Rat};
