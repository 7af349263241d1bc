//! Every numeric knob in one place.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::invalid(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// relative tolerance of the eigenvalue root refinement
    pub root_tol: f64,
    pub quadrature: QuadratureSpec,
    pub n_max: usize,
    pub eps_over_a: f64,
    pub rho0_sq: f64,
    pub n_states: usize,
    pub grid_points: usize,
    /// upper end of the `x/ε` grid
    pub grid_max_x_over_eps: f64,
    pub output_format: OutputFormat,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            root_tol: 1e-12,
            quadrature: QuadratureSpec::default(),
            n_max: 400,
            eps_over_a: 0.001,
            rho0_sq: 50.0,
            n_states: 4,
            grid_points: 2000,
            grid_max_x_over_eps: 10.0,
            output_format: OutputFormat::Csv,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        self.quadrature.validate()?;
        if !(self.root_tol > 0.0 && self.root_tol < 1e-2) {
            return Err(Error::invalid(format!(
                "root_tol must lie in (0, 1e-2), got {}",
                self.root_tol
            )));
        }
        if self.n_max < 2 {
            return Err(Error::invalid(format!(
                "n_max must be >= 2, got {}",
                self.n_max
            )));
        }
        if !(self.eps_over_a > 0.0 && self.eps_over_a < 1.0) {
            return Err(Error::invalid(format!(
                "eps_over_a must lie in (0, 1), got {}",
                self.eps_over_a
            )));
        }
        if !self.rho0_sq.is_finite() {
            return Err(Error::invalid("rho0_sq must be finite"));
        }
        if self.n_states < 1 {
            return Err(Error::invalid("n_states must be >= 1"));
        }
        if self.n_states > self.n_max {
            return Err(Error::invalid(format!(
                "n_states ({}) cannot exceed n_max ({})",
                self.n_states, self.n_max
            )));
        }
        if self.grid_points < 2 {
            return Err(Error::invalid("grid_points must be >= 2"));
        }
        if !(self.grid_max_x_over_eps > 0.0 && self.grid_max_x_over_eps.is_finite()) {
            return Err(Error::invalid("grid_max_x_over_eps must be positive"));
        }
        Ok(())
    }

    /// Uniform `x/ε` grid `[0, grid_max]` with `grid_points` samples.
    pub fn x_over_eps_grid(&self) -> Vec<f64> {
        linspace(0.0, self.grid_max_x_over_eps, self.grid_points)
    }

    /// `key=value` pairs in a fixed order, in the syntax the CLI accepts from
    /// a config file.
    pub fn key_values(&self) -> Vec<(&'static str, String)> {
        vec![
            ("root_tol", fmt_f64(self.root_tol)),
            ("rel_tol", fmt_f64(self.quadrature.rel_tol)),
            ("abs_tol", fmt_f64(self.quadrature.abs_tol)),
            (
                "max_subdivisions",
                self.quadrature.max_subdivisions.to_string(),
            ),
            ("n_max", self.n_max.to_string()),
            ("eps_over_a", fmt_f64(self.eps_over_a)),
            ("rho0_sq", fmt_f64(self.rho0_sq)),
            ("n_states", self.n_states.to_string()),
            ("grid_points", self.grid_points.to_string()),
            ("grid_max_x_over_eps", fmt_f64(self.grid_max_x_over_eps)),
            ("output_format", self.output_format.to_string()),
        ]
    }

    /// Apply one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::invalid(format!("cannot parse {key}={value:?}")))
        }
        match key {
            "root_tol" => self.root_tol = parse(key, value)?,
            "rel_tol" => self.quadrature.rel_tol = parse(key, value)?,
            "abs_tol" => self.quadrature.abs_tol = parse(key, value)?,
            "max_subdivisions" => self.quadrature.max_subdivisions = parse(key, value)?,
            "n_max" => self.n_max = parse(key, value)?,
            "eps_over_a" => self.eps_over_a = parse(key, value)?,
            "rho0_sq" => self.rho0_sq = parse(key, value)?,
            "n_states" => self.n_states = parse(key, value)?,
            "grid_points" => self.grid_points = parse(key, value)?,
            "grid_max_x_over_eps" => self.grid_max_x_over_eps = parse(key, value)?,
            "output_format" => self.output_format = value.parse()?,
            other => return Err(Error::invalid(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }
}

/// 17 significant digits: enough to round-trip any double.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            let mut v: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
            v[n - 1] = hi;
            v
        }
    }
}
