//! Independent reference implementations used only by the tests.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Composite 20-point Gauss–Legendre over `panels` equal panels.
pub fn composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let (x, w) = gauss_legendre(20);
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let mut s = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            s += wi * f(mid + 0.5 * h * xi);
        }
        total += 0.5 * h * s;
    }
    total
}

/// `K_ν(x) = ∫₀^∞ e^{−x cosh t} cosh(νt) dt` for real order ν.
pub fn bessel_k_real(nu: f64, x: f64) -> f64 {
    let t_max = (1.0 + 800.0 / x).acosh();
    composite(|t| (-x * t.cosh()).exp() * (nu * t).cosh(), 0.0, t_max, 400)
}

/// `K_ig(x) = ∫₀^∞ e^{−x cosh t} cos(gt) dt`, brute force.
pub fn bessel_k_imag(g: f64, x: f64) -> f64 {
    let t_max = (1.0 + 800.0 / x).acosh();
    let panels = 400 + (g * t_max * 8.0) as usize;
    composite(
        |t| (-x * t.cosh()).exp() * (g * t).cos(),
        0.0,
        t_max,
        panels,
    )
}

/// `∫_ρ^1 (1 − cos nπy)/y² dy` with `y = e^u`.
pub fn l2_direct(n: i64, rho: f64) -> f64 {
    let k = n as f64 * PI;
    composite(
        |u| (1.0 - (k * u.exp()).cos()) * (-u).exp(),
        rho.ln(),
        0.0,
        400,
    )
}

/// Complex `ln Γ(z)` for `Re z > 0`: upward shift then Stirling series.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let shift = 30;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..shift {
        acc += (z + j as f64).ln();
    }
    let w = z + shift as f64;
    let w2 = w * w;
    let series = 1.0 / (12.0 * w) - 1.0 / (360.0 * w * w2) + 1.0 / (1260.0 * w * w2 * w2)
        - 1.0 / (1680.0 * w * w2 * w2 * w2);
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - acc
}

/// The matrix element `h^V_nm/E₀` from the defining two-region integral
/// with `a = 1`.
pub fn potential_element(rho0_sq: f64, eps: f64, n: usize, m: usize) -> f64 {
    let (kn, km) = (n as f64 * PI, m as f64 * PI);
    let prod = |x: f64| 2.0 * (kn * x).sin() * (km * x).sin();
    let inner = composite(prod, 0.0, eps, 40) / (eps * eps);
    let outer = composite(|u| prod(u.exp()) * (-u).exp(), eps.ln(), 0.0, 2000);
    -(rho0_sq / (PI * PI)) * (inner + outer)
}
