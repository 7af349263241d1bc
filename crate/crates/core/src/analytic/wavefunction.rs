use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::quad::{integrate_partition, QuadratureSpec};
use crate::specfun::{bessel_k_im_scaled, ImagOrder};
use crate::types::{
    fix_sign, validate_grid, EigenRecord, Method, PotentialSpec, TableKind, WavefunctionTable,
};

/// Largest `ρ_ε·y` the normalization integral looks at.
const MAX_DECAY_ARGUMENT: f64 = 740.0;

fn check_record(spec: &PotentialSpec, record: &EigenRecord) -> Result<ImagOrder> {
    if record.method != Method::Analytic {
        return Err(Error::invalid(format!(
            "expected an analytic eigenvalue, got a {} record",
            record.method.as_str()
        )));
    }
    if record.rho0_sq != spec.rho0_sq {
        return Err(Error::invalid(format!(
            "record strength {} does not match spec strength {}",
            record.rho0_sq, spec.rho0_sq
        )));
    }
    if !(record.rho_eps_sq > 0.0 && record.rho_eps_sq < spec.rho0_sq) {
        return Err(Error::invalid(format!(
            "rho_eps^2 = {} outside (0, rho0^2)",
            record.rho_eps_sq
        )));
    }
    ImagOrder::from_strength(spec.rho0_sq)
}

/// Normalization constant
/// `h_n = ∫₀¹ sin²(qε y)/sin²(qε) dy + ∫₁^∞ y K²(ρ_ε y)/K²(ρ_ε) dy`.
///
/// The inner part is closed-form. The outer part is integrated over panels
/// growing geometrically while `ρ_ε y < 1` and then of width `2/ρ_ε`, and
/// stops when `ρ_ε y > 740` or when the tail bound from
/// `K(z) ≤ √(π/2z) e^{−z}` (valid once `z ≥ max(2g², 10)`) drops below
/// `abs_tol`.
pub fn normalization_h(
    spec: &PotentialSpec,
    record: &EigenRecord,
    q: &QuadratureSpec,
) -> Result<f64> {
    let order = check_record(spec, record)?;
    let rho = record.rho_eps();
    let qe = record.q_eps;
    let sin_q = qe.sin();
    let inner = (0.5 - (2.0 * qe).sin() / (4.0 * qe)) / (sin_q * sin_q);

    let k_ref = bessel_k_im_scaled(order, rho, q)?;
    let g = order.g();
    let asymptotic_from = (2.0 * g * g).max(10.0);

    let mut breaks = vec![1.0];
    let mut y = 1.0f64;
    loop {
        let z = rho * y;
        if z > MAX_DECAY_ARGUMENT {
            break;
        }
        if z >= asymptotic_from {
            let tail = std::f64::consts::PI / (4.0 * rho * rho) * (-2.0 * (z - rho)).exp()
                / (k_ref * k_ref);
            if tail < q.abs_tol {
                break;
            }
        }
        y = if z < 1.0 {
            (y * std::f64::consts::SQRT_2).min(y + 2.0 / rho)
        } else {
            y + 2.0 / rho
        };
        breaks.push(y);
    }

    let failure = RefCell::new(None);
    let integrand = |y: f64| match bessel_k_im_scaled(order, rho * y, q) {
        Ok(k) => {
            let ratio = k / k_ref;
            y * ratio * ratio * (-2.0 * rho * (y - 1.0)).exp()
        }
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    let outer = if breaks.len() > 1 {
        integrate_partition(integrand, &breaks, q)?
    } else {
        0.0
    };
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(inner + outer)
}

/// Normalized wavefunction on a grid of `x/ε`:
/// `√ε ψ = h^{−1/2}·sin(qε y)/sin(qε)` for `y < 1` and
/// `h^{−1/2}·√y K(ρ_ε y)/K(ρ_ε)` for `y ≥ 1`.
///
/// `Density` returns `ε|ψ|²`. The amplitude sign makes the first lobe
/// positive.
pub fn analytic_wavefunction(
    spec: &PotentialSpec,
    record: &EigenRecord,
    grid: &[f64],
    kind: TableKind,
    q: &QuadratureSpec,
) -> Result<WavefunctionTable> {
    let order = check_record(spec, record)?;
    validate_grid(grid)?;
    let h = normalization_h(spec, record, q)?;
    let norm = h.sqrt().recip();
    let rho = record.rho_eps();
    let qe = record.q_eps;
    let sin_q = qe.sin();
    let k_ref = bessel_k_im_scaled(order, rho, q)?;

    let mut values = Vec::with_capacity(grid.len());
    for &y in grid {
        let v = if y < 1.0 {
            (qe * y).sin() / sin_q
        } else if rho * y > MAX_DECAY_ARGUMENT {
            0.0
        } else {
            let k = bessel_k_im_scaled(order, rho * y, q)?;
            y.sqrt() * (k / k_ref) * (-rho * (y - 1.0)).exp()
        };
        values.push(norm * v);
    }
    fix_sign(&mut values);

    let table = WavefunctionTable {
        grid: grid.to_vec(),
        values,
        n: record.n,
        spec: *spec,
        kind: TableKind::Amplitude,
        method: Method::Analytic,
    };
    Ok(match kind {
        TableKind::Amplitude => table,
        TableKind::Density => table.into_density(),
    })
}
