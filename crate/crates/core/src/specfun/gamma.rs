use crate::error::{Error, Result};

use super::bessel::ImagOrder;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Digamma at a positive integer: `ψ(m) = −γ + Σ_{j=1}^{m−1} 1/j`.
pub fn digamma_int(m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("digamma argument", 0.0));
    }
    let harmonic: f64 = (1..m).map(|j| 1.0 / j as f64).sum();
    Ok(harmonic - EULER_GAMMA)
}

// u − atan(u), with the cancellation removed for small u.
fn excess(u: f64) -> f64 {
    if u.abs() < 0.1 {
        let u2 = u * u;
        let mut term = u * u2;
        let mut sum = 0.0;
        let mut sign = 1.0;
        for k in 1..=9 {
            sum += sign * term / f64::from(2 * k + 1);
            term *= u2;
            sign = -sign;
        }
        sum
    } else {
        u - u.atan()
    }
}

// atan(u)/u − 1 for |u| ≤ 0.1.
fn atan_ratio_minus_one(u: f64) -> f64 {
    let u2 = u * u;
    let mut term = u2;
    let mut sum = 0.0;
    let mut sign = -1.0;
    for k in 1..=9 {
        sum += sign * term / f64::from(2 * k + 1);
        term *= u2;
        sign = -sign;
    }
    sum
}

/// `φ(k) = arg Γ(1 + k + ig)`, continuous in `g`, from
/// `g ψ(1+k) + Σ_{n≥0} [g/(1+k+n) − atan(g/(1+k+n))]`.
///
/// The first terms are summed directly; from `m = M` on the tail is replaced
/// by its Euler–Maclaurin expansion, whose integral part is closed-form:
/// `∫_M^∞ (g/m − atan(g/m)) dm = g(atan u/u − 1) + (g/2) ln(1 + u²)`, `u = g/M`.
/// `M ≥ max(64, 20g)` keeps the neglected fifth-derivative term below 1e-15.
pub fn arg_gamma(k: u64, order: ImagOrder) -> Result<f64> {
    let g = order.g();
    if g == 0.0 {
        return Ok(0.0);
    }
    let start = k + 1;
    let cutoff = start.max(64).max((20.0 * g).ceil() as u64);
    let mut sum = 0.0;
    for m in start..cutoff {
        sum += excess(g / m as f64);
    }
    let m = cutoff as f64;
    let u = g / m;
    let integral = g * atan_ratio_minus_one(u) + 0.5 * g * (u * u).ln_1p();
    let f = excess(u);
    let m2 = m * m;
    let g2 = g * g;
    let s = m2 + g2;
    let d1 = -g * g2 / (m2 * s);
    let d3 = -6.0 * g / (m2 * m2) - 2.0 * g / (s * s) + 8.0 * g * m2 / (s * s * s);
    let tail = integral + 0.5 * f - d1 / 12.0 + d3 / 720.0;
    Ok(g * digamma_int(start)? + sum + tail)
}
