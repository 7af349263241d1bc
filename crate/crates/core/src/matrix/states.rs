use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{
    fix_sign, validate_grid, EigenRecord, Method, TableKind, Units, WavefunctionTable,
};

use super::basis::{BasisConfig, HamiltonianMatrix};
use super::eigen::lowest_eigenpairs;

/// A state is wall-affected when `max|ψ|` on `x/a ∈ [0.99, 1]` exceeds this
/// fraction of `max|ψ|` on the whole well.
pub const WALL_THRESHOLD: f64 = 1e-3;

/// Samples per basis index used when scanning for the wall criterion.
const WALL_SAMPLES_PER_MODE: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSolution {
    /// `E/E₀`, ascending
    pub energies: Vec<f64>,
    /// coefficient vectors `c_m`, `m = 1..=N`, orthonormal
    pub vectors: Vec<Vec<f64>>,
    pub config: BasisConfig,
}

pub fn diagonalize(h: &HamiltonianMatrix, k_lowest: usize) -> Result<EigenSolution> {
    let eig = lowest_eigenpairs(&h.entries, h.dim, k_lowest)?;
    Ok(EigenSolution {
        energies: eig.values,
        vectors: eig.vectors,
        config: h.config,
    })
}

/// The negative-energy states, converted to `ρ_ε²` and numbered from 1.
pub fn bound_states(sol: &EigenSolution) -> Vec<EigenRecord> {
    let spec = sol.config.spec;
    sol.energies
        .iter()
        .take_while(|e| **e < 0.0)
        .enumerate()
        .map(|(i, e)| {
            let rho_eps_sq = Units::rho_eps_sq_from_e0(*e, spec.eps_over_a);
            EigenRecord::new(i + 1, spec.rho0_sq, rho_eps_sq, Method::Matrix)
        })
        .collect()
}

/// `Σ_m c_m √2 sin(mπx)` at one point, by the Chebyshev recurrence for
/// `sin(mθ)`.
fn expand(coeffs: &[f64], x: f64) -> f64 {
    let theta = PI * x;
    let two_cos = 2.0 * theta.cos();
    let (mut prev, mut cur) = (0.0, theta.sin());
    let mut sum = 0.0;
    for &c in coeffs {
        sum += c * cur;
        let next = two_cos * cur - prev;
        prev = cur;
        cur = next;
    }
    SQRT_2 * sum
}

fn state_vector(sol: &EigenSolution, state: usize) -> Result<&[f64]> {
    if state < 1 || state > sol.vectors.len() {
        return Err(Error::invalid(format!(
            "state {state} outside 1..={}",
            sol.vectors.len()
        )));
    }
    Ok(&sol.vectors[state - 1])
}

/// Evaluate eigenvector `state` (1-based) at `x/a` grid points.
///
/// The table is returned on `x/ε` with values `√ε ψ`, the convention of the
/// analytic route. Points exactly at 0 and 1 are set to zero.
pub fn reconstruct_wavefunction(
    sol: &EigenSolution,
    state: usize,
    grid_x_over_a: &[f64],
) -> Result<WavefunctionTable> {
    let coeffs = state_vector(sol, state)?;
    validate_grid(grid_x_over_a)?;
    if grid_x_over_a.iter().any(|x| *x > 1.0) {
        return Err(Error::invalid("grid must lie within [0, 1] in units of a"));
    }
    let spec = sol.config.spec;
    let eps = spec.eps_over_a;
    let scale = eps.sqrt();
    let mut values: Vec<f64> = grid_x_over_a
        .iter()
        .map(|&x| {
            if x == 0.0 || x == 1.0 {
                0.0
            } else {
                scale * expand(coeffs, x)
            }
        })
        .collect();
    fix_sign(&mut values);
    Ok(WavefunctionTable {
        grid: grid_x_over_a.iter().map(|x| x / eps).collect(),
        values,
        n: state,
        spec,
        kind: TableKind::Amplitude,
        method: Method::Matrix,
    })
}

/// `max|ψ|` over the last 1% of the well divided by `max|ψ|` overall.
pub fn edge_ratio(sol: &EigenSolution, state: usize) -> Result<f64> {
    let coeffs = state_vector(sol, state)?;
    let samples = WALL_SAMPLES_PER_MODE * coeffs.len().max(100);
    let mut peak = 0.0f64;
    let mut edge = 0.0f64;
    for i in 1..samples {
        let x = i as f64 / samples as f64;
        let v = expand(coeffs, x).abs();
        peak = peak.max(v);
        if x >= 0.99 {
            edge = edge.max(v);
        }
    }
    Ok(if peak > 0.0 { edge / peak } else { 0.0 })
}

pub fn wall_affected(sol: &EigenSolution, state: usize) -> Result<bool> {
    Ok(edge_ratio(sol, state)? > WALL_THRESHOLD)
}

/// Strict sign changes between consecutive samples, skipping samples below
/// `1e-9·max|ψ|`.
pub fn count_nodes(table: &WavefunctionTable) -> Result<usize> {
    if table.kind != TableKind::Amplitude {
        return Err(Error::invalid("node counting needs an amplitude table"));
    }
    let guard = 1e-9 * table.max_abs();
    let mut nodes = 0;
    let mut last_sign = 0.0;
    for v in table.values.iter().filter(|v| v.abs() > guard) {
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            nodes += 1;
        }
        last_sign = s;
    }
    Ok(nodes)
}
