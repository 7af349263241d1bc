use invsq_core::analytic::{
    analytic_wavefunction, approx_ground_energy, approx_ladder, solve_spectrum,
};
use invsq_core::harness::{collapse_metric, compare_spectra, rel_diff};
use invsq_core::matrix::{
    assemble, bound_states, diagonalize, reconstruct_wavefunction, wall_affected, BasisConfig,
};
use invsq_core::{PotentialSpec, SolverConfig, TableKind};

use crate::cli::{Axis, Kind};
use crate::output::{join, Cell, Table};
use crate::Failure;

const DEFAULT_EPS_LIST: [f64; 3] = [0.02, 0.01, 0.005];

fn spec(rho0_sq: f64, eps_over_a: f64) -> Result<PotentialSpec, Failure> {
    PotentialSpec::new(rho0_sq, eps_over_a).map_err(Failure::usage)
}

pub fn spectrum(cfg: SolverConfig, strengths: &[f64]) -> Result<Table, Failure> {
    let mut table = Table::new(
        "spectrum",
        cfg,
        &[
            "rho0_sq",
            "n",
            "rho_eps_sq_analytic",
            "rho_eps_sq_matrix",
            "rel_diff",
            "wall_flag",
        ],
    );
    table.extra.push(("rho0_sq_list", join(strengths)));
    for &rho0_sq in strengths {
        let report = compare_spectra(
            &spec(rho0_sq, cfg.eps_over_a)?,
            cfg.n_states,
            cfg.n_max,
            &cfg,
        )?;
        for p in &report.pairs {
            table.push(vec![
                Cell::Num(rho0_sq),
                Cell::Int(p.n),
                Cell::Num(p.rho_eps_sq_analytic),
                Cell::opt(p.rho_eps_sq_matrix),
                Cell::opt(p.rel_diff),
                Cell::Bool(p.wall_affected),
            ]);
        }
    }
    Ok(table)
}

pub fn wavefunction(cfg: SolverConfig, kind: Kind, axis: Axis) -> Result<Table, Failure> {
    let eps = cfg.eps_over_a;
    let grid = cfg.x_over_eps_grid();
    if cfg.grid_max_x_over_eps * eps > 1.0 {
        return Err(Failure::Usage(format!(
            "grid reaches x/a = {}; keep grid_max * eps_over_a <= 1",
            cfg.grid_max_x_over_eps * eps
        )));
    }
    let s = spec(cfg.rho0_sq, eps)?;
    let (kind_core, value_col) = match kind {
        Kind::Amplitude => (TableKind::Amplitude, "amplitude"),
        Kind::Density => (TableKind::Density, "density"),
    };
    let axis_col = match axis {
        Axis::XOverEps => "x_over_eps",
        Axis::XOverA => "x_over_a",
    };
    let mut table = Table::new(
        "wavefunction",
        cfg,
        &["n", "method", axis_col, value_col, "wall_flag"],
    );
    table.extra.push(("kind", value_col.to_string()));
    table.extra.push(("axis", axis_col.to_string()));

    let analytic = solve_spectrum(&s, cfg.n_states, &cfg)?;
    let sol = diagonalize(&assemble(&BasisConfig::new(cfg.n_max, s)?)?, cfg.n_states)?;
    let matrix_bound = bound_states(&sol).len();
    let x_over_a: Vec<f64> = grid.iter().map(|y| y * eps).collect();
    let abscissa = |i: usize| match axis {
        Axis::XOverEps => grid[i],
        Axis::XOverA => x_over_a[i],
    };

    for n in 1..=cfg.n_states {
        if let Some(rec) = analytic.records.get(n - 1) {
            let t = analytic_wavefunction(&s, rec, &grid, kind_core, &cfg.quadrature)?;
            for (i, v) in t.values.iter().enumerate() {
                table.push(vec![
                    Cell::Int(n),
                    Cell::Text("analytic".into()),
                    Cell::Num(abscissa(i)),
                    Cell::Num(*v),
                    Cell::Empty,
                ]);
            }
        }
        if n <= matrix_bound {
            let mut t = reconstruct_wavefunction(&sol, n, &x_over_a)?;
            if kind_core == TableKind::Density {
                t = t.into_density();
            }
            let walled = wall_affected(&sol, n)?;
            for (i, v) in t.values.iter().enumerate() {
                table.push(vec![
                    Cell::Int(n),
                    Cell::Text("matrix".into()),
                    Cell::Num(abscissa(i)),
                    Cell::Num(*v),
                    Cell::Bool(walled),
                ]);
            }
        }
    }
    Ok(table)
}

pub fn scaling(
    cfg: SolverConfig,
    eps_list: Option<Vec<f64>>,
    strengths: Option<Vec<f64>>,
) -> Result<Table, Failure> {
    let eps_list = eps_list.unwrap_or_else(|| DEFAULT_EPS_LIST.to_vec());
    let strengths = strengths.unwrap_or_else(|| vec![cfg.rho0_sq]);
    let grid = cfg.x_over_eps_grid();
    let mut table = Table::new(
        "scaling",
        cfg,
        &[
            "rho0_sq",
            "record",
            "eps_over_a",
            "x_over_eps",
            "density",
            "rho_eps_sq",
            "max_pairwise_dev",
            "max_dev_vs_analytic",
        ],
    );
    table.extra.push(("eps_list", join(&eps_list)));
    table.extra.push(("rho0_sq_list", join(&strengths)));
    for &rho0_sq in &strengths {
        let base = spec(rho0_sq, cfg.eps_over_a)?;
        let r = collapse_metric(&base, &eps_list, &grid, cfg.n_max, &cfg)?;
        let curves = std::iter::once((None, &r.analytic_curve, r.rho_eps_sq_analytic)).chain(
            r.epsilon_list
                .iter()
                .zip(&r.curves)
                .zip(&r.rho_eps_sq_matrix)
                .map(|((e, c), rho)| (Some(*e), c, *rho)),
        );
        for (eps, curve, rho) in curves {
            let record = if eps.is_some() { "matrix" } else { "analytic" };
            for (x, d) in r.grid.iter().zip(curve) {
                table.push(vec![
                    Cell::Num(rho0_sq),
                    Cell::Text(record.into()),
                    Cell::opt(eps),
                    Cell::Num(*x),
                    Cell::Num(*d),
                    Cell::Num(rho),
                    Cell::Empty,
                    Cell::Empty,
                ]);
            }
        }
        table.push(vec![
            Cell::Num(rho0_sq),
            Cell::Text("summary".into()),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Num(r.max_pairwise_dev),
            Cell::Num(r.max_dev_vs_analytic),
        ]);
    }
    Ok(table)
}

pub fn ladder(cfg: SolverConfig, strengths: &[f64]) -> Result<Table, Failure> {
    let mut table = Table::new(
        "ladder",
        cfg,
        &[
            "rho0_sq",
            "n",
            "rho_eps_sq_exact",
            "rho_eps_sq_approx",
            "rel_diff",
            "ratio_exact",
            "ratio_asymptotic",
        ],
    );
    table.extra.push(("rho0_sq_list", join(strengths)));
    for &rho0_sq in strengths {
        let s = spec(rho0_sq, cfg.eps_over_a)?;
        let exact = solve_spectrum(&s, cfg.n_states, &cfg)?;
        let e1 = approx_ground_energy(&s)?;
        let asymptotic = (-2.0 * std::f64::consts::PI / exact.g).exp();
        for (i, rec) in exact.records.iter().enumerate() {
            let approx = approx_ladder(&e1, rec.n).ok().map(|r| r.rho_eps_sq);
            let ratio = (i > 0).then(|| rec.rho_eps_sq / exact.records[i - 1].rho_eps_sq);
            table.push(vec![
                Cell::Num(rho0_sq),
                Cell::Int(rec.n),
                Cell::Num(rec.rho_eps_sq),
                Cell::opt(approx),
                Cell::opt(approx.map(|a| rel_diff(rec.rho_eps_sq, a))),
                Cell::opt(ratio),
                Cell::Num(asymptotic),
            ]);
        }
    }
    Ok(table)
}

pub fn converge(cfg: SolverConfig, n_max_list: &[usize]) -> Result<Table, Failure> {
    if let Some(bad) = n_max_list.iter().find(|n| **n < cfg.n_states.max(2)) {
        return Err(Failure::Usage(format!(
            "every n_max must be >= max(2, n_states); got {bad}"
        )));
    }
    let k = cfg.n_states;
    let mut columns = vec!["n_max".to_string(), "energy_over_e0_1".to_string()];
    for n in 1..=k {
        columns.push(format!("rho_eps_sq_{n}"));
        columns.push(format!("rel_change_{n}"));
    }
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new("converge", cfg, &column_refs);
    table.extra.push((
        "n_max_list",
        n_max_list
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(","),
    ));

    let s = spec(cfg.rho0_sq, cfg.eps_over_a)?;
    let mut previous: Vec<Option<f64>> = vec![None; k];
    for &n_max in n_max_list {
        let sol = diagonalize(&assemble(&BasisConfig::new(n_max, s)?)?, k)?;
        let bound = bound_states(&sol);
        let mut row = vec![Cell::Int(n_max), Cell::Num(sol.energies[0])];
        for (n, prev) in previous.iter_mut().enumerate() {
            let current = bound.get(n).map(|r| r.rho_eps_sq);
            let change = match (*prev, current) {
                (Some(p), Some(c)) => Some(rel_diff(c, p)),
                _ => None,
            };
            row.push(Cell::opt(current));
            row.push(Cell::opt(change));
            *prev = current;
        }
        table.push(row);
    }
    Ok(table)
}
