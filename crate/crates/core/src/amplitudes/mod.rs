//! Discrete network amplitudes: chain compositions, colored-network
//! partition functions with the Penrose 3-coloring evaluation, and the
//! 1+1 lightcone checkerboard with its path-sum oracle.

mod chain;
mod checkerboard;
mod network;

pub use chain::{chain_amplitude, ChainError};
pub use checkerboard::{
    checkerboard_evolve, checkerboard_path_oracle, CheckerboardError, Direction,
    LightconeLattice, EVOLVE_CAP, ORACLE_CAP,
};
pub use network::{
    gallery, penrose_count, Color, EdgeId, Network, NetworkError, PenroseReport, VertexId,
    VertexWeight,
};
