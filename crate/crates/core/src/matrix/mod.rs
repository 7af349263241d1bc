//! The matrix route: the truncated potential inside an infinite square well
//! of width `a`, expanded in the well's sine basis `√(2/a) sin(nπx/a)`.
//!
//! Internally `a = 1`; energies are in units of `E₀ = ħ²π²/(2m₀a²)`.

mod basis;
pub mod eigen;
mod states;

pub use basis::{assemble, BasisConfig, HamiltonianMatrix};
pub use states::{
    bound_states, count_nodes, diagonalize, edge_ratio, reconstruct_wavefunction, wall_affected,
    EigenSolution, WALL_THRESHOLD,
};
