use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;
use crate::specfun::{bessel_k_im_scaled_pair, ImagOrder};
use crate::types::PotentialSpec;

/// Pieces of the matching condition at one trial `ρ_ε`, all scaled by `e^{ρ_ε}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingTerms {
    pub rho_eps: f64,
    pub q_eps: f64,
    /// `e^{ρ}K_{ig}(ρ)`
    pub k: f64,
    /// `e^{ρ}ρK′_{ig}(ρ)`
    pub rho_dk: f64,
    /// `e^{ρ}G(ρ)`
    pub residual: f64,
}

impl MatchingTerms {
    /// Size of the two products whose difference is `G`.
    pub fn scale(&self) -> f64 {
        (self.q_eps * self.k)
            .abs()
            .max((self.q_eps.sin() * self.rho_dk).abs())
    }
}

pub(crate) fn terms(
    order: ImagOrder,
    rho0_sq: f64,
    rho_eps: f64,
    q: &QuadratureSpec,
) -> Result<MatchingTerms> {
    let q_eps = (rho0_sq - rho_eps * rho_eps).sqrt();
    let (k, dk) = bessel_k_im_scaled_pair(order, rho_eps, q)?;
    let rho_dk = rho_eps * dk;
    let residual = q_eps * q_eps.cos() * k - q_eps.sin() * (0.5 * k + rho_dk);
    Ok(MatchingTerms {
        rho_eps,
        q_eps,
        k,
        rho_dk,
        residual,
    })
}

fn check_domain(spec: &PotentialSpec, rho_eps: f64) -> Result<ImagOrder> {
    let order = ImagOrder::from_strength(spec.rho0_sq)?;
    if !(rho_eps > 0.0 && rho_eps < spec.rho0()) {
        return Err(Error::domain("rho_eps (must lie in (0, rho0))", rho_eps));
    }
    Ok(order)
}

/// Scaled matching terms at `ρ_ε`; see [`matching_residual`].
pub fn matching_terms(
    spec: &PotentialSpec,
    rho_eps: f64,
    q: &QuadratureSpec,
) -> Result<MatchingTerms> {
    let order = check_domain(spec, rho_eps)?;
    terms(order, spec.rho0_sq, rho_eps, q)
}

/// Pole-free matching residual
/// `G(ρ_ε) = qε cos(qε) K(ρ_ε) − sin(qε)[K(ρ_ε)/2 + ρ_ε K′(ρ_ε)]`,
/// `qε = √(ρ₀² − ρ_ε²)`.
///
/// This is the cross-multiplied form of
/// `tan(qε)/(qε) = 2K/(K + 2ρ_ε K′)`; its zeros are the bound states.
pub fn matching_residual(spec: &PotentialSpec, rho_eps: f64, q: &QuadratureSpec) -> Result<f64> {
    let t = matching_terms(spec, rho_eps, q)?;
    Ok(t.residual * (-rho_eps).exp())
}
