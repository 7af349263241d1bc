use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{arg_gamma, ImagOrder};
use crate::types::{EigenRecord, Method, PotentialSpec};

use super::spectrum::UNDERFLOW_FLOOR;

/// The inverse-tangent term of the small-`ρ_ε` ground-state estimate,
/// `atan[(g tanρ₀/ρ₀)/(1 − tanρ₀/(2ρ₀))]`, on a branch continuous in `ρ₀`.
///
/// Multiplying numerator and denominator by `cos ρ₀` gives
/// `z = (cos ρ₀ − sin ρ₀/(2ρ₀)) + i g sin ρ₀/ρ₀`, which has no poles and never
/// vanishes (`Im z = 0` only at `ρ₀ = kπ` where `Re z = ±1`). Its continuous
/// phase lies in `(kπ, (k+1)π)` for `ρ₀ ∈ (kπ, (k+1)π)`. The returned angle is
/// that phase minus `π`, which reproduces the exact ground state as
/// `ρ₀² → 1/4`.
pub fn ground_branch_angle(rho0: f64, g: f64) -> f64 {
    let re = rho0.cos() - rho0.sin() / (2.0 * rho0);
    let im = g * rho0.sin() / rho0;
    let k = (rho0 / PI).floor();
    let flip = if k as i64 % 2 == 0 { 1.0 } else { -1.0 };
    let principal = (flip * im).atan2(flip * re);
    k * PI + principal - PI
}

/// Small-`ρ_ε` estimate of the ground state,
/// `ρ_ε,1² = 4 exp{(2/g)[φ(0) + atan(…)]}` with the branch of
/// [`ground_branch_angle`].
pub fn approx_ground_energy(spec: &PotentialSpec) -> Result<EigenRecord> {
    spec.require_bound_states()?;
    let order = ImagOrder::from_strength(spec.rho0_sq)?;
    let g = order.g();
    let phase = arg_gamma(0, order)? + ground_branch_angle(spec.rho0(), g);
    let rho_eps_sq = 4.0 * (2.0 * phase / g).exp();
    Ok(EigenRecord::new(
        1,
        spec.rho0_sq,
        rho_eps_sq,
        Method::Asymptotic,
    ))
}

/// Geometric ladder `E_n = E₁ exp[−2π(n−1)/g]` built on a ground-state record.
pub fn approx_ladder(e1: &EigenRecord, n: usize) -> Result<EigenRecord> {
    if e1.n != 1 {
        return Err(Error::invalid(format!(
            "ladder base must be the ground state, got n = {}",
            e1.n
        )));
    }
    if n < 1 {
        return Err(Error::invalid("ladder index must be >= 1"));
    }
    if !(e1.g > 0.0) {
        return Err(Error::BelowThreshold {
            rho0_sq: e1.rho0_sq,
        });
    }
    if n == 1 {
        return Ok(EigenRecord {
            method: Method::Asymptotic,
            ..*e1
        });
    }
    let rho_eps_sq = e1.rho_eps_sq * (-2.0 * PI * (n - 1) as f64 / e1.g).exp();
    if rho_eps_sq < UNDERFLOW_FLOOR {
        return Err(Error::Underflow {
            n,
            rho_eps_sq,
            floor: UNDERFLOW_FLOOR,
        });
    }
    Ok(EigenRecord::new(
        n,
        e1.rho0_sq,
        rho_eps_sq,
        Method::Asymptotic,
    ))
}
