use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// `sin(z)/z`, with the removable singularity at zero.
pub fn sinc(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 * (1.0 - z2 / 20.0)
    } else {
        z.sin() / z
    }
}

const SERIES_LIMIT: f64 = 6.0;

/// Sine integral `Si(z) = ∫₀^z sin(t)/t dt` for `z ≥ 0`.
///
/// Power series up to `z = 6`. Beyond that `Si(z) = π/2 − f(z) cos z − g(z) sin z`
/// where the auxiliary functions come from the continued fraction for
/// `e^{iz}E₁(iz) = g(z) − i f(z)`, evaluated with the modified Lentz method.
pub fn sine_integral(z: f64) -> f64 {
    debug_assert!(z >= 0.0, "sine_integral requires z >= 0");
    if z <= SERIES_LIMIT {
        series(z)
    } else {
        let (f, g) = auxiliary(z);
        FRAC_PI_2 - f * z.cos() - g * z.sin()
    }
}

fn series(z: f64) -> f64 {
    let z2 = z * z;
    // term_k = (−1)^k z^{2k+1} / (2k+1)!
    let mut term = z;
    let mut sum = z;
    for k in 1..60 {
        let kf = k as f64;
        term *= -z2 / ((2.0 * kf) * (2.0 * kf + 1.0));
        let contrib = term / (2.0 * kf + 1.0);
        sum += contrib;
        if contrib.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Auxiliary functions `f(z)`, `g(z)` with `Si = π/2 − f cos − g sin`,
/// `Ci = f sin − g cos`.
///
/// Continued fraction `E₁(iz) = e^{−iz} / (1 + iz − 1²/(3 + iz − 2²/(5 + iz − …)))`,
/// and `e^{iz}E₁(iz) = g(z) − i f(z)`.
fn auxiliary(z: f64) -> (f64, f64) {
    const TINY: f64 = 1e-300;
    // complex arithmetic on (re, im) pairs
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let inv = |a: (f64, f64)| {
        let d = a.0 * a.0 + a.1 * a.1;
        (a.0 / d, -a.1 / d)
    };
    let mut b = (1.0, z);
    let mut c = (1.0 / TINY, 0.0);
    let mut d = inv(b);
    let mut h = d;
    for i in 1..1000 {
        let a = -((i * i) as f64);
        b.0 += 2.0;
        let ad = mul((a, 0.0), d);
        d = inv((ad.0 + b.0, ad.1 + b.1));
        let ac = mul((a, 0.0), inv(c));
        c = (b.0 + ac.0, b.1 + ac.1);
        let del = mul(c, d);
        h = mul(h, del);
        if (del.0 - 1.0).abs() + del.1.abs() < 1e-16 {
            break;
        }
    }
    // h = e^{iz} E₁(iz) = g − i f
    (-h.1, h.0)
}

/// `L₂(n, ρ) = ∫_ρ^1 (1 − cos(nπy))/y² dy` for `0 < ρ ≤ 1`, via
/// `(1 − cos nπρ)/ρ − (1 − cos nπ) + nπ[Si(nπ) − Si(nπρ)]`.
/// The integrand is even in `n`, so `|n|` is used.
pub fn l2_integral(n: i64, rho: f64) -> Result<f64> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Error::domain("L2 lower limit rho", rho));
    }
    let n = n.unsigned_abs();
    if n == 0 {
        return Ok(0.0);
    }
    let w = n as f64 * PI;
    let one_minus_cos_end = if n.rem_euclid(2) == 0 { 0.0 } else { 2.0 };
    let one_minus_cos_start = 2.0 * (0.5 * w * rho).sin().powi(2);
    Ok(one_minus_cos_start / rho - one_minus_cos_end
        + w * (sine_integral(w) - sine_integral(w * rho)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_values() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-16);
        assert!((sinc(1.0) - 0.841_470_984_807_896_5).abs() < 1e-15);
        // both sides of the series switch agree
        let a = sinc(0.999_999e-4);
        let b = sinc(1.000_001e-4);
        assert!((a - b).abs() < 1e-14);
        assert_eq!(sinc(-0.3), sinc(0.3));
    }

    #[test]
    fn sine_integral_limits() {
        assert_eq!(sine_integral(0.0), 0.0);
        assert!((sine_integral(1e6) - FRAC_PI_2).abs() < 1e-5);
    }

    #[test]
    fn sine_integral_is_continuous_at_the_switch() {
        let below = series(SERIES_LIMIT);
        let (f, g) = auxiliary(SERIES_LIMIT);
        let above = FRAC_PI_2 - f * SERIES_LIMIT.cos() - g * SERIES_LIMIT.sin();
        assert!((below - above).abs() < 1e-14, "{below} vs {above}");
    }

    #[test]
    fn auxiliary_functions_approach_their_asymptotes() {
        let z = 1e4;
        let (f, g) = auxiliary(z);
        assert!((f * z - 1.0).abs() < 1e-7);
        assert!((g * z * z - 1.0).abs() < 1e-6);
    }

    #[test]
    fn l2_edge_cases() {
        assert_eq!(l2_integral(0, 0.3).unwrap(), 0.0);
        assert_eq!(l2_integral(-3, 0.2).unwrap(), l2_integral(3, 0.2).unwrap());
        assert!(l2_integral(2, 1.0).unwrap().abs() < 1e-13);
        assert!(l2_integral(1, 0.0).is_err());
        assert!(l2_integral(1, 1.5).is_err());
        assert!(l2_integral(1, f64::NAN).is_err());
    }
}
