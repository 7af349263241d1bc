//! Shared inputs for the criterion benchmarks.

use invsq_core::PotentialSpec;

/// The strengths shown in the density comparisons.
pub const STRENGTHS: [f64; 3] = [1.0, 5.0, 50.0];

pub fn spec(rho0_sq: f64, eps_over_a: f64) -> PotentialSpec {
    PotentialSpec::new(rho0_sq, eps_over_a).expect("benchmark spec is valid")
}
