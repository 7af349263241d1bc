//! The analytic route: match `A sin(qx)` inside the cutoff to `B√(κx)K_{ig}(κx)`
//! outside it, and enumerate the roots of the matching condition.

mod approx;
mod matching;
mod spectrum;
mod wavefunction;

pub use approx::{approx_ground_energy, approx_ladder, ground_branch_angle};
pub use matching::{matching_residual, matching_terms, MatchingTerms};
pub use spectrum::{solve_spectrum, Spectrum, Truncation, UNDERFLOW_FLOOR};
pub use wavefunction::{analytic_wavefunction, normalization_h};

/// Coefficient `ℓ² − 1/4` of `(ħ²/2m₀)/r²` in the effective radial potential of
/// a cylindrically symmetric problem written for `u(r) = √r R(r)`.
///
/// For `ℓ = 0` the centrifugal term is attractive and sits exactly at the
/// critical strength.
pub fn effective_strength_2d(ell: i64) -> f64 {
    let l = ell as f64;
    l * l - 0.25
}
