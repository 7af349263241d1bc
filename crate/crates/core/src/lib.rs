//! Bound states of the `-α/x²` potential with a constant cutoff on `(0, ε)`.
//!
//! Two independent routes are provided:
//!
//! * [`analytic`] matches an inner sine to an outer `√ρ·K_ig(ρ)` solution at
//!   `x = ε` and enumerates the roots of the resulting eigencondition.
//! * [`matrix`] embeds the potential in an infinite square well of width `a`,
//!   assembles the Hamiltonian in the well's sine basis and diagonalizes it.
//!
//! [`harness`] cross-validates the two and builds the figure datasets.
//! Everything is expressed in dimensionless groups: the strength
//! `ρ₀² = 2m₀α/ħ²`, the cutoff ratio `ε/a`, and the eigenvalue `ρ_ε² = κ²ε²`.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod analytic;
pub mod config;
pub mod error;
pub mod harness;
pub mod matrix;
pub mod quad;
pub mod roots;
pub mod specfun;
pub mod types;

pub use config::{OutputFormat, SolverConfig};
pub use error::{Error, Result};
pub use quad::QuadratureSpec;
pub use specfun::ImagOrder;
pub use types::{
    EigenRecord, Method, PotentialSpec, TableKind, Units, WavefunctionTable, CRITICAL_STRENGTH,
};
