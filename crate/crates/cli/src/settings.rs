use std::fs;
use std::path::Path;

use invsq_core::SolverConfig;

use crate::cli::{Common, StrengthSweep};
use crate::Failure;

/// Defaults, then the config file, then flags.
pub fn resolve(common: &Common) -> Result<SolverConfig, Failure> {
    let mut cfg = SolverConfig::default();
    if let Some(path) = &common.config {
        apply_file(&mut cfg, path)?;
    }
    if let Some(v) = common.rho0_sq {
        cfg.rho0_sq = v;
    }
    if let Some(v) = common.eps_over_a {
        cfg.eps_over_a = v;
    }
    if let Some(v) = common.n_max {
        cfg.n_max = v;
    }
    if let Some(v) = common.n_states {
        cfg.n_states = v;
    }
    if let Some(v) = common.grid_points {
        cfg.grid_points = v;
    }
    if let Some(v) = common.grid_max {
        cfg.grid_max_x_over_eps = v;
    }
    if let Some(v) = &common.format {
        cfg.output_format = v.parse().map_err(Failure::usage)?;
    }
    cfg.validate().map_err(Failure::usage)?;
    Ok(cfg)
}

/// Lines of whitespace-separated `key=value` pairs; `#` starts a comment.
fn apply_file(cfg: &mut SolverConfig, path: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        for token in content.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| {
                Failure::Usage(format!(
                    "{}:{}: expected key=value, got {token:?}",
                    path.display(),
                    lineno + 1
                ))
            })?;
            cfg.set(key.trim(), value.trim()).map_err(Failure::usage)?;
        }
    }
    Ok(())
}

/// The `ρ₀²` values to visit: a range, a list, or the single configured one.
pub fn strengths(sweep: &StrengthSweep, cfg: &SolverConfig) -> Result<Vec<f64>, Failure> {
    if let Some(range) = &sweep.rho0_sq_range {
        return parse_range(range);
    }
    if let Some(list) = &sweep.rho0_sq_list {
        return non_empty(list.clone(), "--rho0-sq-list");
    }
    Ok(vec![cfg.rho0_sq])
}

pub fn non_empty<T>(list: Vec<T>, flag: &str) -> Result<Vec<T>, Failure> {
    if list.is_empty() {
        Err(Failure::Usage(format!("{flag} is empty")))
    } else {
        Ok(list)
    }
}

/// `lo:hi:step`, inclusive of `hi` up to a small rounding slack.
pub fn parse_range(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "expected LO:HI:STEP with LO <= HI and STEP > 0, got {text:?}"
        ))
    };
    let parts: Vec<f64> = text
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [lo, hi, step] = parts[..] else {
        return Err(bad());
    };
    if !(lo.is_finite() && hi.is_finite() && step > 0.0 && step.is_finite() && lo <= hi) {
        return Err(bad());
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}
