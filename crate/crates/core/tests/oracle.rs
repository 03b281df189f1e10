mod common;

use common::*;
use kratzer_core::constants::PhysicalConstants;
use kratzer_core::oracle::{
    build_hamiltonian, oracle_energy, oracle_solve, verify, RadialGrid, TridiagonalMatrix,
    DEFAULT_POINTS,
};
use kratzer_core::specfun::radial_wavefunction;
use kratzer_core::{compute_kappa, energy_level, EtaMode, MoleculeParams, QuantumState};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

/// Eigenvalues below σ from the sign agreements of the leading principal minors.
fn minors_count(d: &[f64], e: &[f64], sigma: f64) -> usize {
    let mut prev = 1.0f64;
    let mut cur = d[0] - sigma;
    let mut count = usize::from(cur < 0.0);
    for i in 1..d.len() {
        let next = (d[i] - sigma) * cur - e[i - 1] * e[i - 1] * prev;
        if (next < 0.0) != (cur < 0.0) {
            count += 1;
        }
        prev = cur;
        cur = next;
    }
    count
}

#[test]
fn sturm_count_matches_minor_sequence() {
    let mut rng = StdRng::seed_from_u64(50);
    for _ in 0..20 {
        let d: Vec<f64> = (0..50).map(|_| rng.random_range(-1.0..1.0)).collect();
        let e: Vec<f64> = (0..49).map(|_| rng.random_range(-0.5..0.5)).collect();
        let m = TridiagonalMatrix::new(d.clone(), e.clone()).unwrap();
        for _ in 0..40 {
            let sigma = rng.random_range(-2.5..2.5);
            assert_eq!(
                m.sturm_count(sigma),
                minors_count(&d, &e, sigma),
                "sigma {sigma}"
            );
        }
        let ev = m.eigen_lowest(50).unwrap();
        assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        let trace: f64 = d.iter().sum();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-10);
    }
}

#[test]
fn oracle_matches_closed_form_h2_and_two_dimensions() {
    for p in [h2(), kappa2(2), natural(30.0, EtaMode::Modified, 3)] {
        for dim in [2, 3, 6] {
            let rows = verify(&p, &[dim], 2, 2, DEFAULT_POINTS).unwrap();
            for r in rows {
                assert!(
                    r.rel_err < 1e-6,
                    "{} N={dim} n={} l={}: {}",
                    p.name(),
                    r.n,
                    r.l,
                    r.rel_err
                );
            }
        }
    }
}

#[test]
fn verify_orders_rows() {
    let rows = verify(&kappa2(3), &[3, 4], 1, 1, 2001).unwrap();
    let keys: Vec<_> = rows.iter().map(|r| (r.dimension, r.n, r.l)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(rows.len(), 8);
}

/// The alternative indicial exponent γ' = (N−2)/2 + sqrt(κ + λ²) only agrees
/// with the oracle at N = 2.
#[test]
fn gamma_sign_adjudication() {
    for dim in [2u32, 3, 4, 5] {
        let p = hcl().with_dimension(dim).unwrap();
        let kappa = compute_kappa(&p);
        for l in 0..=2 {
            let s = QuantumState::new(0, l, dim).unwrap();
            let lam = s.effective_l();
            let alt_gamma = (dim as f64 - 2.0) / 2.0 + (kappa + lam * lam).sqrt();
            let alt_beta = kappa / (alt_gamma + (dim as f64 - 1.0) / 2.0);
            let alt_e = p.threshold() - alt_beta * alt_beta * p.de() / kappa;
            let grid = RadialGrid::for_state(&p, &s).unwrap();
            let oracle = oracle_energy(&s, &p, &grid).unwrap();
            let closed = energy_level(&s, &p).unwrap();
            assert!(rel(closed, oracle) < 1e-6);
            if dim == 2 {
                assert!(rel(alt_e, oracle) < 1e-6);
            } else {
                assert!(rel(alt_e, oracle) > 1e3 * 1e-6, "N={dim} l={l}");
            }
        }
    }
}

#[test]
fn richardson_convergence_order() {
    let p = kappa2(3);
    let s = QuantumState::new(1, 1, 3).unwrap();
    let exact = energy_level(&s, &p).unwrap();
    let base = RadialGrid::for_state(&p, &s).unwrap();
    let err = |points: usize| {
        let g = RadialGrid::new(base.r_min, base.r_max, points).unwrap();
        let sol = oracle_solve(&s, &p, &g).unwrap();
        ((sol.coarse - exact).abs(), (sol.extrapolated - exact).abs())
    };
    let (raw1, ext1) = err(1001);
    let (raw2, ext2) = err(2001);
    let raw_order = (raw1 / raw2).log2();
    let ext_order = (ext1 / ext2).log2();
    assert!((raw_order - 2.0).abs() < 0.4, "raw order {raw_order}");
    assert!(
        (ext_order - 4.0).abs() < 0.8,
        "extrapolated order {ext_order}"
    );
}

#[test]
fn eigenvectors_overlap_closed_form_wavefunctions() {
    for p in [kappa2(3), hcl().with_dimension(4).unwrap()] {
        let dim = p.dimension();
        for n in 0..=3 {
            for l in [0, 2] {
                let s = QuantumState::new(n, l, dim).unwrap();
                let grid = RadialGrid::for_state(&p, &s).unwrap();
                let h = build_hamiltonian(&p, l, &grid).unwrap();
                let v = h.eigenvector(h.eigenvalue(n as usize).unwrap());
                let ys: Vec<f64> = grid.interior().map(|r| r / p.re()).collect();
                let f = radial_wavefunction(&s, &p, &[1.0]).unwrap();
                let u: Vec<f64> = ys.iter().map(|&y| f.reduced_value(y)).collect();
                let dot: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
                let nu = u.iter().map(|a| a * a).sum::<f64>().sqrt();
                let overlap = dot.abs() / nu;
                assert!(overlap > 0.99999, "{} n={n} l={l}: {overlap}", p.name());
            }
        }
    }
}

#[test]
fn si_and_natural_units_agree() {
    let si = hcl();
    let nat = MoleculeParams::in_units(
        "hcl-natural",
        compute_kappa(&si) / 2.0,
        1.0,
        1.0,
        EtaMode::Kratzer,
        3,
        PhysicalConstants::NATURAL,
    )
    .unwrap();
    let s = QuantumState::new(2, 1, 3).unwrap();
    let a = oracle_energy(&s, &si, &RadialGrid::for_state(&si, &s).unwrap()).unwrap() / si.de();
    let b = oracle_energy(&s, &nat, &RadialGrid::for_state(&nat, &s).unwrap()).unwrap();
    assert!(rel(a, b) < 1e-9, "{a} vs {b}");
}
