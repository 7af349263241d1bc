use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{self, QuadratureSpec};
use crate::types::CRITICAL_STRENGTH;

use super::gamma::arg_gamma;

/// Imaginary Bessel order `ν = i·g`, stored as `g ≥ 0`.
///
/// `K_{ig}` is even in `g`, so the sign of the order is dropped at
/// construction and only `g ≥ 0` is representable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImagOrder {
    g: f64,
}

impl ImagOrder {
    pub fn new(g: f64) -> Result<Self> {
        if !g.is_finite() || g < 0.0 {
            return Err(Error::domain("imaginary order g", g));
        }
        Ok(Self { g })
    }

    /// `g = √(ρ₀² − 1/4)`; only strengths above the critical value have an
    /// imaginary order.
    pub fn from_strength(rho0_sq: f64) -> Result<Self> {
        if !rho0_sq.is_finite() {
            return Err(Error::domain("strength rho0^2", rho0_sq));
        }
        if rho0_sq <= CRITICAL_STRENGTH {
            return Err(Error::BelowThreshold { rho0_sq });
        }
        Ok(Self {
            g: (rho0_sq - CRITICAL_STRENGTH).sqrt(),
        })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// `ν² = −g²`.
    pub fn nu_sq(&self) -> f64 {
        -self.g * self.g
    }
}

/// `∫₀^T e^{−x(cosh t − 1)} coshᵖ t · cos(g t) dt`, i.e. `(−1)ᵖ eˣ K⁽ᵖ⁾_{ig}(x)`.
fn scaled_integral(order: ImagOrder, x: f64, power: i32, q: &QuadratureSpec) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("Bessel argument x", x));
    }
    let g = order.g;
    let log_inv_tol = if q.abs_tol > 0.0 {
        -q.abs_tol.ln()
    } else {
        -f64::MIN_POSITIVE.ln()
    };
    let upper = (1.0 + log_inv_tol / x).max(2.0).acosh() + 5.0;
    let width = if g > 1.0 { PI / (8.0 * g) } else { PI / 8.0 };
    let panels = (upper / width).ceil() as usize;
    let p = f64::from(power);
    let integrand = |t: f64| {
        let half = (0.5 * t).sinh();
        let exponent = -2.0 * x * half * half + if power == 0 { 0.0 } else { p * t.cosh().ln() };
        exponent.exp() * (g * t).cos()
    };
    quad::integrate(integrand, 0.0, upper, panels, q).map_err(|e| match e {
        Error::Convergence { previous, last, .. } => Error::Convergence {
            what: "K_ig quadrature",
            previous,
            last,
        },
        other => other,
    })
}

/// Modified Bessel function of imaginary order,
/// `K_{ig}(x) = ∫₀^∞ e^{−x cosh t} cos(g t) dt`.
pub fn bessel_k_im(order: ImagOrder, x: f64, q: &QuadratureSpec) -> Result<f64> {
    Ok((-x).exp() * scaled_integral(order, x, 0, q)?)
}

/// `eˣ K_{ig}(x)`, which stays representable for large `x`.
pub fn bessel_k_im_scaled(order: ImagOrder, x: f64, q: &QuadratureSpec) -> Result<f64> {
    scaled_integral(order, x, 0, q)
}

/// `(eˣ K_{ig}(x), eˣ K′_{ig}(x))` in one call.
pub fn bessel_k_im_scaled_pair(order: ImagOrder, x: f64, q: &QuadratureSpec) -> Result<(f64, f64)> {
    let k = scaled_integral(order, x, 0, q)?;
    let dk = -scaled_integral(order, x, 1, q)?;
    Ok((k, dk))
}

/// `dK_{ig}/dx = −∫₀^∞ e^{−x cosh t} cosh t · cos(g t) dt`, by quadrature of
/// the differentiated integrand.
pub fn bessel_k_im_deriv(order: ImagOrder, x: f64, q: &QuadratureSpec) -> Result<f64> {
    Ok(-(-x).exp() * scaled_integral(order, x, 1, q)?)
}

/// `d²K_{ig}/dx² = ∫₀^∞ e^{−x cosh t} cosh² t · cos(g t) dt`.
pub fn bessel_k_im_deriv2(order: ImagOrder, x: f64, q: &QuadratureSpec) -> Result<f64> {
    Ok((-x).exp() * scaled_integral(order, x, 2, q)?)
}

/// Leading small-argument form
/// `K_{ig}(x) ≈ −√(2πg e^{−πg}/(1 − e^{−2πg}))·(1/g)·sin(g ln(x/2) − φ(0))`
/// with `φ(0) = arg Γ(1 + ig)`.
///
/// At `g = 0` the `g → 0` limit `−ln(x/2) − γ` is returned.
pub fn bessel_k_im_smallx(order: ImagOrder, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("Bessel argument x", x));
    }
    let g = order.g;
    let phase = arg_gamma(0, order)?;
    if g == 0.0 {
        return Ok(-(0.5 * x).ln() - super::gamma::EULER_GAMMA);
    }
    let amplitude = (2.0 * PI * g * (-PI * g).exp() / -(-2.0 * PI * g).exp_m1()).sqrt() / g;
    Ok(-amplitude * (g * (0.5 * x).ln() - phase).sin())
}
