use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{l2_integral, sinc};
use crate::types::PotentialSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisConfig {
    /// number of sine basis functions `N_max`
    pub n_max: usize,
    pub spec: PotentialSpec,
}

impl BasisConfig {
    pub fn new(n_max: usize, spec: PotentialSpec) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::invalid(format!("n_max must be >= 2, got {n_max}")));
        }
        Ok(Self { n_max, spec })
    }
}

/// Dense symmetric `h_nm = H_nm/E₀`, stored full and row-major; index `i`
/// corresponds to basis function `n = i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    pub dim: usize,
    pub entries: Vec<f64>,
    pub config: BasisConfig,
}

impl HamiltonianMatrix {
    /// `h_nm` for 1-based `n`, `m`.
    pub fn h(&self, n: usize, m: usize) -> f64 {
        self.entries[(n - 1) * self.dim + (m - 1)]
    }
}

/// Assemble
/// `h_nm = n²δ_nm − (ρ₀²/π²){(a/ε)[δ_nm + (1−δ_nm)Sinc((n−m)πε/a) − Sinc((n+m)πε/a)]
///        + L₂(n+m, ε/a) − L₂(n−m, ε/a)}`.
///
/// Entries depend on `n ± m` apart from the Kronecker terms, so `Sinc` and
/// `L₂` are tabulated once over `0..=2N`.
pub fn assemble(config: &BasisConfig) -> Result<HamiltonianMatrix> {
    let n_max = config.n_max;
    let eps = config.spec.eps_over_a;
    let strength = config.spec.rho0_sq / (PI * PI);
    let inv_eps = 1.0 / eps;

    let sinc_table: Vec<f64> = (0..=2 * n_max).map(|k| sinc(k as f64 * PI * eps)).collect();
    let l2_table = (0..=2 * n_max)
        .map(|k| l2_integral(k as i64, eps))
        .collect::<Result<Vec<f64>>>()?;

    let mut entries = vec![0.0; n_max * n_max];
    for n in 1..=n_max {
        for m in 1..=n {
            let diff = n - m;
            let sum = n + m;
            let near = if diff == 0 { 1.0 } else { sinc_table[diff] };
            let potential = inv_eps * (near - sinc_table[sum]) + l2_table[sum] - l2_table[diff];
            let kinetic = if diff == 0 { (n * n) as f64 } else { 0.0 };
            let h = kinetic - strength * potential;
            entries[(n - 1) * n_max + (m - 1)] = h;
            entries[(m - 1) * n_max + (n - 1)] = h;
        }
    }
    Ok(HamiltonianMatrix {
        dim: n_max,
        entries,
        config: *config,
    })
}
