//! Physical constants and unit conversions.
//!
//! Source: CODATA 2018 recommended values (Tiesinga et al., Rev. Mod. Phys. 93,
//! 025010 (2021)). h, c and the electron-volt are exact by SI definition.

use std::f64::consts::PI;

/// A consistent set of physical constants.
///
/// Everything inside the crate runs in SI with [`PhysicalConstants::CODATA_2018`];
/// other sets exist only for unit-rescaling checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Planck constant (J s).
    pub h: f64,
    /// Speed of light in vacuum (m/s).
    pub c: f64,
    /// Unified atomic mass unit (kg).
    pub amu: f64,
    /// Electron-volt (J).
    pub ev: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: 1.054_571_817e-34,
        h: 6.626_070_15e-34,
        c: 299_792_458.0,
        amu: 1.660_539_066_60e-27,
        ev: 1.602_176_634e-19,
    };

    /// Natural units with hbar = 1. Masses and energies are taken as given.
    pub const NATURAL: PhysicalConstants = PhysicalConstants {
        hbar: 1.0,
        h: 2.0 * PI,
        c: 1.0,
        amu: 1.0,
        ev: 1.0,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

pub const ANGSTROM: f64 = 1.0e-10;

pub fn amu_to_kg(m: f64) -> f64 {
    m * PhysicalConstants::CODATA_2018.amu
}

pub fn ev_to_joule(e: f64) -> f64 {
    e * PhysicalConstants::CODATA_2018.ev
}

pub fn joule_to_ev(e: f64) -> f64 {
    e / PhysicalConstants::CODATA_2018.ev
}

pub fn angstrom_to_m(r: f64) -> f64 {
    r * ANGSTROM
}

/// E/(hc) in cm⁻¹. Linear and sign-preserving.
pub fn energy_to_wavenumber(energy: f64) -> f64 {
    let k = PhysicalConstants::CODATA_2018;
    // hc in J m; 1 m⁻¹ = 0.01 cm⁻¹
    energy / (k.h * k.c) * 0.01
}
