//! Domain types shared by the analytic and matrix routes.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strength `ρ₀² = 1/4` separating no bound states from infinitely many.
pub const CRITICAL_STRENGTH: f64 = 0.25;

/// The truncated potential in dimensionless form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    /// `ρ₀² = 2m₀α/ħ²`
    pub rho0_sq: f64,
    /// cutoff ratio `ε/a`; only the matrix route and energy conversions use it
    pub eps_over_a: f64,
}

impl PotentialSpec {
    pub fn new(rho0_sq: f64, eps_over_a: f64) -> Result<Self> {
        if !rho0_sq.is_finite() {
            return Err(Error::domain("strength rho0^2", rho0_sq));
        }
        if !(eps_over_a > 0.0 && eps_over_a < 1.0) {
            return Err(Error::domain("cutoff ratio eps/a", eps_over_a));
        }
        Ok(Self {
            rho0_sq,
            eps_over_a,
        })
    }

    pub fn rho0(&self) -> f64 {
        self.rho0_sq.sqrt()
    }

    pub fn supports_bound_states(&self) -> bool {
        self.rho0_sq > CRITICAL_STRENGTH
    }

    pub(crate) fn require_bound_states(&self) -> Result<()> {
        if self.supports_bound_states() {
            Ok(())
        } else {
            Err(Error::BelowThreshold {
                rho0_sq: self.rho0_sq,
            })
        }
    }
}

/// Energy conversions between `ρ_ε²` and the two natural energy units:
/// the well depth `α/ε²` and `E₀ = ħ²π²/(2m₀a²)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Units;

impl Units {
    /// `E/(α/ε²) = −ρ_ε²/ρ₀²`
    pub fn energy_over_depth(rho_eps_sq: f64, rho0_sq: f64) -> f64 {
        -rho_eps_sq / rho0_sq
    }

    /// `E/E₀ = −ρ_ε²·(a/ε)²/π²`
    pub fn energy_over_e0(rho_eps_sq: f64, eps_over_a: f64) -> f64 {
        -rho_eps_sq / (PI * PI * eps_over_a * eps_over_a)
    }

    /// Inverse of [`Units::energy_over_e0`].
    pub fn rho_eps_sq_from_e0(energy_over_e0: f64, eps_over_a: f64) -> f64 {
        -energy_over_e0 * PI * PI * eps_over_a * eps_over_a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Analytic,
    Matrix,
    Asymptotic,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Matrix => "matrix",
            Method::Asymptotic => "asymptotic",
        }
    }
}

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenRecord {
    /// quantum number, 1 = ground state
    pub n: usize,
    pub rho0_sq: f64,
    /// `ρ_ε² = −E ρ₀² ε²/α`
    pub rho_eps_sq: f64,
    /// `qε = √(ρ₀² − ρ_ε²)`; NaN for an asymptotic estimate that lands
    /// below the bottom of the well
    pub q_eps: f64,
    pub g: f64,
    pub method: Method,
}

impl EigenRecord {
    pub fn new(n: usize, rho0_sq: f64, rho_eps_sq: f64, method: Method) -> Self {
        let inner = rho0_sq - rho_eps_sq;
        Self {
            n,
            rho0_sq,
            rho_eps_sq,
            q_eps: if inner >= 0.0 { inner.sqrt() } else { f64::NAN },
            g: (rho0_sq - CRITICAL_STRENGTH).max(0.0).sqrt(),
            method,
        }
    }

    pub fn rho_eps(&self) -> f64 {
        self.rho_eps_sq.sqrt()
    }

    pub fn energy_over_depth(&self) -> f64 {
        Units::energy_over_depth(self.rho_eps_sq, self.rho0_sq)
    }

    pub fn energy_over_e0(&self, eps_over_a: f64) -> f64 {
        Units::energy_over_e0(self.rho_eps_sq, eps_over_a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// `√ε·ψ`
    Amplitude,
    /// `ε·|ψ|²`
    Density,
}

/// A sampled wavefunction on a grid of `x/ε`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionTable {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub n: usize,
    pub spec: PotentialSpec,
    pub kind: TableKind,
    pub method: Method,
}

impl WavefunctionTable {
    /// Trapezoid integral of the values over the grid.
    pub fn trapezoid(&self) -> f64 {
        trapezoid(&self.grid, &self.values)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Square the amplitudes in place; a density table is returned unchanged.
    pub fn into_density(mut self) -> Self {
        if self.kind == TableKind::Amplitude {
            for v in &mut self.values {
                *v *= *v;
            }
            self.kind = TableKind::Density;
        }
        self
    }
}

pub(crate) fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    x.windows(2)
        .zip(y.windows(2))
        .map(|(xs, ys)| 0.5 * (xs[1] - xs[0]) * (ys[0] + ys[1]))
        .sum()
}

pub(crate) fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::invalid("grid is empty"));
    }
    if grid.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(Error::invalid("grid values must be finite and nonnegative"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("grid must be strictly increasing"));
    }
    Ok(())
}

/// Flip the sign so the first sizeable lobe is positive.
pub(crate) fn fix_sign(values: &mut [f64]) {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak == 0.0 {
        return;
    }
    if let Some(first) = values.iter().find(|v| v.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            for v in values.iter_mut() {
                *v = -*v;
            }
        }
    }
}
