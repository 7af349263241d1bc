mod common;

use invsq_core::config::linspace;
use invsq_core::matrix::eigen::{inf_norm, residual_norm};
use invsq_core::matrix::{
    assemble, bound_states, count_nodes, diagonalize, reconstruct_wavefunction, wall_affected,
    BasisConfig, EigenSolution, HamiltonianMatrix,
};
use invsq_core::{Method, PotentialSpec, Units};
use proptest::prelude::*;

fn build(rho0_sq: f64, eps: f64, n_max: usize) -> HamiltonianMatrix {
    let spec = PotentialSpec::new(rho0_sq, eps).unwrap();
    assemble(&BasisConfig::new(n_max, spec).unwrap()).unwrap()
}

fn solve(rho0_sq: f64, eps: f64, n_max: usize, k: usize) -> EigenSolution {
    diagonalize(&build(rho0_sq, eps, n_max), k).unwrap()
}

#[test]
fn elements_match_the_defining_integral() {
    let h = build(50.0, 0.1, 8);
    for (n, m) in [(1, 1), (1, 2), (2, 5), (7, 7), (3, 8)] {
        let kinetic = if n == m { (n * n) as f64 } else { 0.0 };
        let oracle = kinetic + common::potential_element(50.0, 0.1, n, m);
        assert!(
            (h.h(n, m) - oracle).abs() < 1e-8,
            "h_{n}{m}: {} vs {oracle}",
            h.h(n, m)
        );
    }
}

#[test]
fn elements_match_at_small_cutoff() {
    let h = build(5.0, 0.001, 6);
    for (n, m) in [(1, 1), (2, 3), (6, 6)] {
        let kinetic = if n == m { (n * n) as f64 } else { 0.0 };
        let oracle = kinetic + common::potential_element(5.0, 0.001, n, m);
        assert!((h.h(n, m) - oracle).abs() < 1e-8 * oracle.abs().max(1.0));
    }
}

#[test]
fn free_well_spectrum_and_basis_vectors() {
    for eps in [0.3, 0.001] {
        let sol = solve(0.0, eps, 25, 5);
        for (i, (e, v)) in sol.energies.iter().zip(&sol.vectors).enumerate() {
            assert_eq!(*e, ((i + 1) * (i + 1)) as f64);
            for (j, c) in v.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((c - want).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn eigenpairs_satisfy_residual_and_orthonormality() {
    let h = build(50.0, 0.01, 300);
    let sol = diagonalize(&h, 6).unwrap();
    let scale = inf_norm(&h.entries, h.dim);
    for (e, v) in sol.energies.iter().zip(&sol.vectors) {
        assert!(residual_norm(&h.entries, h.dim, *e, v) < 1e-8 * scale);
    }
    for i in 0..6 {
        for j in 0..6 {
            let dot: f64 = sol.vectors[i]
                .iter()
                .zip(&sol.vectors[j])
                .map(|(a, b)| a * b)
                .sum();
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((dot - want).abs() < 1e-8);
        }
    }
    assert!(sol.energies.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn lowest_level_is_variational_in_basis_size() {
    let mut last = f64::INFINITY;
    for n_max in [100, 200, 400, 800] {
        let e = solve(50.0, 0.001, n_max, 1).energies[0];
        assert!(e <= last, "N={n_max}: {e} above {last}");
        last = e;
    }
}

#[test]
fn no_bound_states_below_threshold() {
    let sol = solve(0.2, 0.01, 800, 3);
    assert!(sol.energies[0] > 0.0);
    assert!(bound_states(&sol).is_empty());
}

#[test]
fn strong_coupling_binds_several_states() {
    let sol = solve(50.0, 0.001, 1200, 4);
    let states = bound_states(&sol);
    assert!(states.len() >= 2);
    for (i, r) in states.iter().enumerate() {
        assert_eq!(r.n, i + 1);
        assert_eq!(r.method, Method::Matrix);
        let e = Units::energy_over_e0(r.rho_eps_sq, 0.001);
        assert!(((e - sol.energies[i]) / e).abs() < 1e-14);
    }
}

#[test]
fn cutoff_ratio_drops_out_for_well_bound_states() {
    let wide = bound_states(&solve(50.0, 0.02, 400, 1))[0].rho_eps_sq;
    let narrow = bound_states(&solve(50.0, 0.01, 800, 1))[0].rho_eps_sq;
    assert!(
        ((wide - narrow) / narrow).abs() < 5e-3,
        "{wide} vs {narrow}"
    );
}

#[test]
fn node_structure_of_low_states() {
    // Smaller bases leave truncation ringing above the 1e-9 node guard in
    // the far tail.
    let sol = solve(50.0, 0.1, 1200, 3);
    let grid = linspace(0.0, 1.0, 4001);
    for state in 1..=3 {
        let t = reconstruct_wavefunction(&sol, state, &grid).unwrap();
        assert_eq!(count_nodes(&t).unwrap(), state - 1);
        assert_eq!(t.values[0], 0.0);
        assert_eq!(*t.values.last().unwrap(), 0.0);
        assert!(!wall_affected(&sol, state).unwrap());
    }
}

#[test]
fn weak_states_in_a_narrow_box_feel_the_wall() {
    let sol = solve(3.0, 0.2, 40, 2);
    assert_eq!(bound_states(&sol).len(), 1);
    assert!(wall_affected(&sol, 1).unwrap());
    assert!(!wall_affected(&solve(3.0, 0.01, 400, 1), 1).unwrap());
}

#[test]
fn reconstruction_is_normalized() {
    let sol = solve(5.0, 0.05, 200, 2);
    let grid = linspace(0.0, 1.0, 40_001);
    for state in 1..=2 {
        let t = reconstruct_wavefunction(&sol, state, &grid)
            .unwrap()
            .into_density();
        assert!((t.trapezoid() - 1.0).abs() < 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn matrix_is_symmetric_with_lowered_diagonal(
        rho0_sq in 0.01f64..80.0,
        eps in 1e-3f64..0.5,
        n in 1usize..60,
        m in 1usize..60,
    ) {
        let h = build(rho0_sq, eps, 60);
        prop_assert_eq!(h.h(n, m), h.h(m, n));
        prop_assert!(h.h(n, n) < (n * n) as f64);
    }

    #[test]
    fn eigenvectors_stay_orthonormal(rho0_sq in 0.5f64..60.0, eps in 0.005f64..0.2) {
        let h = build(rho0_sq, eps, 80);
        let sol = diagonalize(&h, 4).unwrap();
        let scale = inf_norm(&h.entries, h.dim);
        for i in 0..4 {
            prop_assert!(residual_norm(&h.entries, h.dim, sol.energies[i], &sol.vectors[i]) < 1e-8 * scale);
            for j in 0..=i {
                let dot: f64 = sol.vectors[i].iter().zip(&sol.vectors[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() < 1e-8);
            }
        }
    }
}
