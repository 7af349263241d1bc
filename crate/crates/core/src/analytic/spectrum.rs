use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::roots::brent;
use crate::specfun::ImagOrder;
use crate::types::{EigenRecord, Method, PotentialSpec};

use super::matching::terms;

/// States with `ρ_ε²` below this are not computed.
pub const UNDERFLOW_FLOOR: f64 = 1e-280;

/// Largest scan step in `ln ρ_ε`, used when `π/(8g)` would be coarser.
const MAX_SCAN_STEP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Truncation {
    pub requested: usize,
    pub found: usize,
    pub floor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub rho0_sq: f64,
    pub g: f64,
    /// `n = 1` first; `ρ_ε²` strictly decreasing
    pub records: Vec<EigenRecord>,
    /// set when the scan hit [`UNDERFLOW_FLOOR`] before finding every state
    pub truncation: Option<Truncation>,
}

impl Spectrum {
    pub fn rho_eps_sq(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.rho_eps_sq).collect()
    }
}

/// The `n_states` deepest bound states, from the sign changes of the
/// matching residual.
///
/// The scan runs in `s = ln ρ_ε` downward from `ln(0.999ρ₀)` with step
/// `π/(8g)` (at most 0.5): near zero energy the roots are spaced by `π/g`
/// in `s`, so every period gets at least eight samples. Each bracket is
/// refined in `s` to an absolute tolerance `root_tol`, i.e. `ρ_ε` to that
/// relative tolerance. Only `ρ₀²` enters; `ε/a` is never read.
pub fn solve_spectrum(
    spec: &PotentialSpec,
    n_states: usize,
    cfg: &SolverConfig,
) -> Result<Spectrum> {
    spec.require_bound_states()?;
    if n_states < 1 {
        return Err(Error::invalid("n_states must be >= 1"));
    }
    cfg.quadrature.validate()?;
    let order = ImagOrder::from_strength(spec.rho0_sq)?;
    let g = order.g();
    let rho0_sq = spec.rho0_sq;
    let q = cfg.quadrature;
    let residual = |s: f64| terms(order, rho0_sq, s.exp(), &q).map(|t| t.residual);

    let step = (PI / (8.0 * g)).min(MAX_SCAN_STEP);
    let s_floor = 0.5 * UNDERFLOW_FLOOR.ln();
    let mut s_hi = (0.999 * spec.rho0()).ln();
    let mut f_hi = residual(s_hi)?;
    let mut records = Vec::with_capacity(n_states);
    let mut truncation = None;

    while records.len() < n_states {
        let s_lo = s_hi - step;
        if s_lo < s_floor {
            truncation = Some(Truncation {
                requested: n_states,
                found: records.len(),
                floor: UNDERFLOW_FLOOR,
            });
            break;
        }
        let f_lo = residual(s_lo)?;
        if f_lo == 0.0 || f_lo.signum() != f_hi.signum() {
            let s = brent(residual, s_lo, s_hi, f_lo, f_hi, cfg.root_tol, 200)?;
            let rho_eps_sq = (2.0 * s).exp();
            records.push(EigenRecord::new(
                records.len() + 1,
                rho0_sq,
                rho_eps_sq,
                Method::Analytic,
            ));
        }
        s_hi = s_lo;
        f_hi = f_lo;
    }

    Ok(Spectrum {
        rho0_sq,
        g,
        records,
        truncation,
    })
}
