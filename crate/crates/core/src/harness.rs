//! Cross-validation of the analytic and matrix routes, and the datasets
//! behind the spectrum, scaling and ladder comparisons.
//!
//! Every report carries the [`SolverConfig`] it was computed with.

use serde::{Deserialize, Serialize};

use crate::analytic::{analytic_wavefunction, solve_spectrum, Truncation};
use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::matrix::{
    assemble, bound_states, diagonalize, edge_ratio, reconstruct_wavefunction, BasisConfig,
    WALL_THRESHOLD,
};
use crate::types::{PotentialSpec, TableKind};

/// `|a − b| / max(|a|, |b|)`
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonPair {
    pub n: usize,
    pub rho_eps_sq_analytic: f64,
    /// `None` when the matrix route has fewer bound states
    pub rho_eps_sq_matrix: Option<f64>,
    pub rel_diff: Option<f64>,
    /// edge amplitude above [`WALL_THRESHOLD`], or no matrix bound state
    pub wall_affected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub spec: PotentialSpec,
    pub config: SolverConfig,
    pub wall_threshold: f64,
    pub pairs: Vec<ComparisonPair>,
    pub truncation: Option<Truncation>,
}

impl ComparisonReport {
    /// Largest relative difference among matched, unflagged pairs.
    pub fn max_unflagged_rel_diff(&self) -> Option<f64> {
        self.pairs
            .iter()
            .filter(|p| !p.wall_affected)
            .filter_map(|p| p.rel_diff)
            .reduce(f64::max)
    }
}

fn echo(cfg: &SolverConfig, spec: &PotentialSpec, n_max: usize, n_states: usize) -> SolverConfig {
    SolverConfig {
        rho0_sq: spec.rho0_sq,
        eps_over_a: spec.eps_over_a,
        n_max,
        n_states,
        ..*cfg
    }
}

/// Solve both routes for the same spec and pair the states by index.
pub fn compare_spectra(
    spec: &PotentialSpec,
    n_states: usize,
    n_max: usize,
    cfg: &SolverConfig,
) -> Result<ComparisonReport> {
    let analytic = solve_spectrum(spec, n_states, cfg)?;
    let basis = BasisConfig::new(n_max, *spec)?;
    let sol = diagonalize(&assemble(&basis)?, n_states.min(n_max))?;
    let matrix = bound_states(&sol);

    let mut pairs = Vec::with_capacity(analytic.records.len());
    for rec in &analytic.records {
        let m = matrix.get(rec.n - 1).map(|r| r.rho_eps_sq);
        // a state the box has pushed above zero is the extreme wall effect
        let wall_affected = match m {
            Some(_) => edge_ratio(&sol, rec.n)? > WALL_THRESHOLD,
            None => true,
        };
        pairs.push(ComparisonPair {
            n: rec.n,
            rho_eps_sq_analytic: rec.rho_eps_sq,
            rho_eps_sq_matrix: m,
            rel_diff: m.map(|m| rel_diff(rec.rho_eps_sq, m)),
            wall_affected,
        });
    }
    Ok(ComparisonReport {
        spec: *spec,
        config: echo(cfg, spec, n_max, n_states),
        wall_threshold: WALL_THRESHOLD,
        pairs,
        truncation: analytic.truncation,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub spec: PotentialSpec,
    pub config: SolverConfig,
    pub epsilon_list: Vec<f64>,
    /// `x/ε`
    pub grid: Vec<f64>,
    /// `ε|ψ₁|²` from the matrix route, one curve per entry of `epsilon_list`
    pub curves: Vec<Vec<f64>>,
    /// matrix ground-state `ρ_ε²` per entry of `epsilon_list`
    pub rho_eps_sq_matrix: Vec<f64>,
    pub analytic_curve: Vec<f64>,
    pub rho_eps_sq_analytic: f64,
    /// sup-norm over the grid, divided by the analytic peak
    pub max_pairwise_dev: f64,
    pub max_dev_vs_analytic: f64,
}

/// Ground-state densities `ε|ψ₁|²` against `x/ε` for several `ε/a`.
///
/// The strength is taken from `spec_base`; its `ε/a` is used only for the
/// analytic curve, which does not depend on it.
pub fn collapse_metric(
    spec_base: &PotentialSpec,
    epsilon_list: &[f64],
    grid: &[f64],
    n_max: usize,
    cfg: &SolverConfig,
) -> Result<CollapseReport> {
    if epsilon_list.len() < 2 {
        return Err(Error::invalid("collapse needs at least two eps/a values"));
    }
    let analytic = solve_spectrum(spec_base, 1, cfg)?;
    let ground = analytic.records[0];
    let analytic_curve = analytic_wavefunction(
        spec_base,
        &ground,
        grid,
        TableKind::Density,
        &cfg.quadrature,
    )?
    .values;
    let peak = analytic_curve.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut curves = Vec::with_capacity(epsilon_list.len());
    let mut rho_eps_sq_matrix = Vec::with_capacity(epsilon_list.len());
    for &eps in epsilon_list {
        let spec = PotentialSpec::new(spec_base.rho0_sq, eps)?;
        let sol = diagonalize(&assemble(&BasisConfig::new(n_max, spec)?)?, 1)?;
        let record = bound_states(&sol)
            .into_iter()
            .next()
            .ok_or_else(|| Error::invalid(format!("no matrix bound state at eps/a = {eps}")))?;
        let ratio = edge_ratio(&sol, 1)?;
        if ratio > WALL_THRESHOLD {
            return Err(Error::WallContaminated {
                eps_over_a: eps,
                edge_ratio: ratio,
            });
        }
        let x_over_a: Vec<f64> = grid.iter().map(|y| y * eps).collect();
        let table = reconstruct_wavefunction(&sol, 1, &x_over_a)?.into_density();
        curves.push(table.values);
        rho_eps_sq_matrix.push(record.rho_eps_sq);
    }

    let sup = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
            / peak
    };
    let mut max_pairwise_dev = 0.0f64;
    for i in 0..curves.len() {
        for j in 0..i {
            max_pairwise_dev = max_pairwise_dev.max(sup(&curves[i], &curves[j]));
        }
    }
    let max_dev_vs_analytic = curves
        .iter()
        .map(|c| sup(c, &analytic_curve))
        .fold(0.0f64, f64::max);

    let n_states = 1;
    Ok(CollapseReport {
        spec: *spec_base,
        config: echo(cfg, spec_base, n_max, n_states),
        epsilon_list: epsilon_list.to_vec(),
        grid: grid.to_vec(),
        curves,
        rho_eps_sq_matrix,
        analytic_curve,
        rho_eps_sq_analytic: ground.rho_eps_sq,
        max_pairwise_dev,
        max_dev_vs_analytic,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LadderEntry {
    pub n: usize,
    /// `ρ_ε,n+1² / ρ_ε,n²`
    pub ratio: f64,
    /// `e^{−2π/g}`
    pub asymptotic_ratio: f64,
    /// `|ratio − asymptotic| / asymptotic`
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LadderReport {
    pub spec: PotentialSpec,
    pub config: SolverConfig,
    pub g: f64,
    pub entries: Vec<LadderEntry>,
    /// set when states beyond the underflow floor were requested; the
    /// entries then stop at the last computable ratio
    pub truncation: Option<Truncation>,
}

impl LadderReport {
    pub fn deviations(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.deviation).collect()
    }
}

/// Successive level ratios for `n = n_from .. n_to` against the geometric
/// ladder.
pub fn ladder_check(
    spec: &PotentialSpec,
    n_from: usize,
    n_to: usize,
    cfg: &SolverConfig,
) -> Result<LadderReport> {
    if n_from < 1 || n_to <= n_from {
        return Err(Error::invalid(format!(
            "need n_to > n_from >= 1, got {n_from}..{n_to}"
        )));
    }
    let spectrum = solve_spectrum(spec, n_to, cfg)?;
    let asymptotic_ratio = (-2.0 * std::f64::consts::PI / spectrum.g).exp();
    let levels = spectrum.rho_eps_sq();
    let entries = (n_from..n_to)
        .take_while(|n| *n < levels.len())
        .map(|n| {
            let ratio = levels[n] / levels[n - 1];
            LadderEntry {
                n,
                ratio,
                asymptotic_ratio,
                deviation: (ratio - asymptotic_ratio).abs() / asymptotic_ratio,
            }
        })
        .collect();
    Ok(LadderReport {
        spec: *spec,
        config: echo(cfg, spec, cfg.n_max, n_to),
        g: spectrum.g,
        entries,
        truncation: spectrum.truncation,
    })
}
