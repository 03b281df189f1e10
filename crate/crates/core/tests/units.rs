mod common;

use common::*;
use kratzer_core::constants::{energy_to_wavenumber, PhysicalConstants};
use kratzer_core::molecule::{bundled, MoleculeFile};
use kratzer_core::{compute_kappa, energy_level, EtaMode, MoleculeParams, QuantumState};
use proptest::prelude::*;

fn natural_twin(p: &MoleculeParams) -> MoleculeParams {
    MoleculeParams::in_units(
        "twin",
        compute_kappa(p) / 2.0,
        1.0,
        1.0,
        p.eta_mode().unwrap(),
        p.dimension(),
        PhysicalConstants::NATURAL,
    )
    .unwrap()
}

#[test]
fn si_and_natural_units_give_same_reduced_spectrum() {
    for p in [hcl(), h2(), hcl().with_eta(EtaMode::Modified)] {
        let twin = natural_twin(&p);
        for n in 0..=8 {
            for l in 0..=8 {
                let s = QuantumState::new(n, l, 3).unwrap();
                let a = energy_level(&s, &p).unwrap() / p.de();
                let b = energy_level(&s, &twin).unwrap();
                assert!(rel(a, b) < 1e-12, "{} n={n} l={l}: {a} vs {b}", p.name());
            }
        }
    }
}

#[test]
fn reduced_mass_and_mu_files_agree() {
    let atoms = bundled::hcl();
    let text = format!(
        r#"{{"name":"HCl","mu_amu":{},"De_eV":{},"re_angstrom":{},"eta_mode":"kratzer","N":3}}"#,
        atoms.mu_amu(),
        atoms.de_ev,
        atoms.re_angstrom
    );
    let reduced = MoleculeFile::from_json(&text).unwrap();
    let (a, b) = (atoms.to_params().unwrap(), reduced.to_params().unwrap());
    assert!(rel(compute_kappa(&a), compute_kappa(&b)) < 1e-14);
}

#[test]
fn hcl_kappa_and_band_centre() {
    let p = hcl();
    assert!((compute_kappa(&p) - 3517.0).abs() < 5.0);
    let gap = energy_level(&QuantumState::new(1, 0, 3).unwrap(), &p).unwrap()
        - energy_level(&QuantumState::new(0, 0, 3).unwrap(), &p).unwrap();
    assert!(rel(energy_to_wavenumber(gap), 1195.0) < 0.015);
}

proptest! {
    /// Scaling μ by s and D_e by 1/s leaves κ, hence E/D_e, unchanged.
    #[test]
    fn spectrum_depends_only_on_kappa(s in 0.1f64..10.0, n in 0u32..20, l in 0u32..20, dim in 2u32..7) {
        let a = natural(3.0, EtaMode::Kratzer, dim);
        let b = MoleculeParams::in_units("b", s, 3.0 / s, 1.0, EtaMode::Kratzer, dim, PhysicalConstants::NATURAL).unwrap();
        let st = QuantumState::new(n, l, dim).unwrap();
        let ea = energy_level(&st, &a).unwrap() / a.de();
        let eb = energy_level(&st, &b).unwrap() / b.de();
        prop_assert!(rel(ea, eb) < 1e-12);
    }

    /// Lengths enter only through μ r_e²: r_e → r_e·s with μ → μ/s² is invariant.
    #[test]
    fn length_rescaling(s in 0.2f64..5.0, n in 0u32..10, l in 0u32..10) {
        let a = natural(2.5, EtaMode::Modified, 3);
        let b = MoleculeParams::in_units("b", 1.0 / (s * s), 2.5, s, EtaMode::Modified, 3, PhysicalConstants::NATURAL).unwrap();
        let st = QuantumState::new(n, l, 3).unwrap();
        prop_assert!(rel(energy_level(&st, &a).unwrap(), energy_level(&st, &b).unwrap()) < 1e-12);
    }
}
