//! Molecule parameters, quantum labels and the molecule JSON file format.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constants::{amu_to_kg, angstrom_to_m, ev_to_joule, PhysicalConstants};
use crate::error::{domain, Error, Result};

/// Choice of energy origin for the Kratzer potential.
///
/// Both modes describe the same interaction; they differ by a constant shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaMode {
    /// η = −D_e: the well bottom sits at −D_e and the dissociation limit at 0.
    Kratzer,
    /// η = 0: the well bottom sits at 0 and the dissociation limit at D_e.
    Modified,
}

impl fmt::Display for EtaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaMode::Kratzer => f.write_str("kratzer"),
            EtaMode::Modified => f.write_str("modified"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum EnergyShift {
    Mode(EtaMode),
    Raw(f64),
}

/// Physical parameters of a diatomic molecule in the Kratzer model.
///
/// Values are stored in SI (kg, J, m). `hbar` is carried along so the same
/// formulas can be exercised in a rescaled unit system.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeParams {
    name: String,
    mu: f64,
    de: f64,
    re: f64,
    shift: EnergyShift,
    dimension: u32,
    hbar: f64,
}

impl MoleculeParams {
    /// SI constructor: `mu` in kg, `de` in J, `re` in m.
    pub fn new(
        name: impl Into<String>,
        mu: f64,
        de: f64,
        re: f64,
        eta: EtaMode,
        dimension: u32,
    ) -> Result<Self> {
        Self::in_units(
            name,
            mu,
            de,
            re,
            eta,
            dimension,
            PhysicalConstants::CODATA_2018,
        )
    }

    /// Constructor taking amu, eV and Å.
    pub fn from_spectroscopic(
        name: impl Into<String>,
        mu_amu: f64,
        de_ev: f64,
        re_angstrom: f64,
        eta: EtaMode,
        dimension: u32,
    ) -> Result<Self> {
        Self::new(
            name,
            amu_to_kg(mu_amu),
            ev_to_joule(de_ev),
            angstrom_to_m(re_angstrom),
            eta,
            dimension,
        )
    }

    /// Parameters expressed in an arbitrary consistent unit system whose
    /// reduced Planck constant is `units.hbar`.
    pub fn in_units(
        name: impl Into<String>,
        mu: f64,
        de: f64,
        re: f64,
        eta: EtaMode,
        dimension: u32,
        units: PhysicalConstants,
    ) -> Result<Self> {
        for (label, v) in [("reduced mass", mu), ("D_e", de), ("r_e", re)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(domain(format!(
                    "{label} must be positive and finite, got {v}"
                )));
            }
        }
        if dimension < 2 {
            return Err(domain(format!(
                "dimension must be at least 2, got {dimension}"
            )));
        }
        if !(units.hbar > 0.0) {
            return Err(domain("hbar must be positive"));
        }
        Ok(Self {
            name: name.into(),
            mu,
            de,
            re,
            shift: EnergyShift::Mode(eta),
            dimension,
            hbar: units.hbar,
        })
    }

    /// Replaces the energy shift with an arbitrary value (J).
    ///
    /// Test hook for shift-equivalence properties; physical inputs use [`EtaMode`].
    #[doc(hidden)]
    pub fn with_raw_eta(mut self, eta: f64) -> Self {
        self.shift = EnergyShift::Raw(eta);
        self
    }

    pub fn with_eta(mut self, eta: EtaMode) -> Self {
        self.shift = EnergyShift::Mode(eta);
        self
    }

    pub fn with_dimension(mut self, dimension: u32) -> Result<Self> {
        if dimension < 2 {
            return Err(domain(format!(
                "dimension must be at least 2, got {dimension}"
            )));
        }
        self.dimension = dimension;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Reduced mass (kg).
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Dissociation energy (J).
    pub fn de(&self) -> f64 {
        self.de
    }

    /// Equilibrium separation (m).
    pub fn re(&self) -> f64 {
        self.re
    }

    /// Energy shift η (J).
    pub fn eta(&self) -> f64 {
        match self.shift {
            EnergyShift::Mode(EtaMode::Kratzer) => -self.de,
            EnergyShift::Mode(EtaMode::Modified) => 0.0,
            EnergyShift::Raw(v) => v,
        }
    }

    /// `None` when a raw shift override is active.
    pub fn eta_mode(&self) -> Option<EtaMode> {
        match self.shift {
            EnergyShift::Mode(m) => Some(m),
            EnergyShift::Raw(_) => None,
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Dissociation threshold D_e + η (J).
    pub fn threshold(&self) -> f64 {
        self.de + self.eta()
    }
}

/// Radial (vibrational) and angular (rotational) quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
    pub dimension: u32,
}

impl QuantumState {
    pub fn new(n: u32, l: u32, dimension: u32) -> Result<Self> {
        if dimension < 2 {
            return Err(domain(format!(
                "dimension must be at least 2, got {dimension}"
            )));
        }
        Ok(Self { n, l, dimension })
    }

    /// l + (N−2)/2, the only combination of l and N the spectrum depends on.
    pub fn effective_l(&self) -> f64 {
        self.l as f64 + (self.dimension as f64 - 2.0) / 2.0
    }

    pub(crate) fn check_against(&self, params: &MoleculeParams) -> Result<()> {
        if self.dimension != params.dimension() {
            return Err(domain(format!(
                "state dimension {} does not match molecule dimension {}",
                self.dimension,
                params.dimension()
            )));
        }
        Ok(())
    }
}

/// m1·m2/(m1+m2), inputs in amu, result in kg.
pub fn reduced_mass(m1: f64, m2: f64) -> Result<f64> {
    if !(m1 > 0.0 && m2 > 0.0) {
        return Err(domain(format!(
            "masses must be positive, got {m1} and {m2}"
        )));
    }
    Ok(amu_to_kg(m1 * m2 / (m1 + m2)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MassSpec {
    Reduced { mu_amu: f64 },
    Atoms { m1_amu: f64, m2_amu: f64 },
}

/// On-disk molecule description.
///
/// ```json
/// {"name": "HCl", "m1_amu": 1.00782503, "m2_amu": 34.96885268,
///  "De_eV": 4.619, "re_angstrom": 1.2746, "eta_mode": "kratzer", "N": 3}
/// ```
///
/// `mu_amu` may replace the two atomic masses. Unknown keys (e.g. `source`)
/// are ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoleculeFile {
    pub name: String,
    #[serde(flatten)]
    pub mass: MassSpec,
    #[serde(rename = "De_eV")]
    pub de_ev: f64,
    pub re_angstrom: f64,
    pub eta_mode: EtaMode,
    #[serde(rename = "N")]
    pub dimension: u32,
}

impl MoleculeFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn mu_amu(&self) -> f64 {
        match self.mass {
            MassSpec::Reduced { mu_amu } => mu_amu,
            MassSpec::Atoms { m1_amu, m2_amu } => m1_amu * m2_amu / (m1_amu + m2_amu),
        }
    }

    pub fn to_params(&self) -> Result<MoleculeParams> {
        let mu = match self.mass {
            MassSpec::Reduced { mu_amu } => {
                if !(mu_amu > 0.0) {
                    return Err(domain(format!("mu_amu must be positive, got {mu_amu}")));
                }
                amu_to_kg(mu_amu)
            }
            MassSpec::Atoms { m1_amu, m2_amu } => reduced_mass(m1_amu, m2_amu)?,
        };
        MoleculeParams::new(
            self.name.clone(),
            mu,
            ev_to_joule(self.de_ev),
            angstrom_to_m(self.re_angstrom),
            self.eta_mode,
            self.dimension,
        )
    }
}

/// Molecule files shipped with the crate.
pub mod bundled {
    use super::MoleculeFile;

    pub const HCL_JSON: &str = include_str!("../data/hcl.json");
    pub const H2_JSON: &str = include_str!("../data/h2.json");
    pub const EXPERIMENTAL_JSON: &str = include_str!("../data/experimental.json");

    pub fn hcl() -> MoleculeFile {
        MoleculeFile::from_json(HCL_JSON).expect("bundled hcl.json is valid")
    }

    pub fn h2() -> MoleculeFile {
        MoleculeFile::from_json(H2_JSON).expect("bundled h2.json is valid")
    }

    /// Looks up a bundled file by short name (`hcl`, `h2`, with or without `.json`).
    pub fn by_name(name: &str) -> Option<MoleculeFile> {
        let stem = name.strip_suffix(".json").unwrap_or(name);
        match stem.to_ascii_lowercase().as_str() {
            "hcl" => Some(hcl()),
            "h2" => Some(h2()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AMU: f64 = PhysicalConstants::CODATA_2018.amu;

    #[test]
    fn reduced_mass_symmetric() {
        let mu = reduced_mass(2.0, 2.0).unwrap();
        assert!((mu - AMU).abs() / AMU < 1e-15);
    }

    #[test]
    fn reduced_mass_hcl() {
        // 1.007825 * 34.968853 / 35.976678 = 0.979593...
        let mu = reduced_mass(1.007825, 34.968853).unwrap() / AMU;
        assert!((mu - 0.9796).abs() < 5e-5, "{mu}");
    }

    #[test]
    fn reduced_mass_h2() {
        let mu = reduced_mass(1.007825, 1.007825).unwrap() / AMU;
        assert!((mu - 0.5039125).abs() < 1e-12, "{mu}");
    }

    #[test]
    fn reduced_mass_rejects_nonpositive() {
        assert!(matches!(reduced_mass(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(reduced_mass(1.0, -2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn params_validate() {
        assert!(MoleculeParams::new("x", 1.0, 1.0, 1.0, EtaMode::Kratzer, 1).is_err());
        assert!(MoleculeParams::new("x", -1.0, 1.0, 1.0, EtaMode::Kratzer, 3).is_err());
        assert!(MoleculeParams::new("x", 1.0, 0.0, 1.0, EtaMode::Kratzer, 3).is_err());
        assert!(MoleculeParams::new("x", 1.0, 1.0, f64::NAN, EtaMode::Kratzer, 3).is_err());
    }

    #[test]
    fn eta_modes() {
        let p = MoleculeParams::new("x", 1.0, 2.5, 1.0, EtaMode::Kratzer, 3).unwrap();
        assert_eq!(p.eta(), -2.5);
        assert_eq!(p.threshold(), 0.0);
        let p = p.with_eta(EtaMode::Modified);
        assert_eq!(p.eta(), 0.0);
        assert_eq!(p.threshold(), 2.5);
        let p = p.with_raw_eta(0.75);
        assert_eq!(p.eta_mode(), None);
        assert_eq!(p.eta(), 0.75);
    }

    #[test]
    fn molecule_file_with_atom_masses() {
        let f = MoleculeFile::from_json(
            r#"{"name":"X","m1_amu":2.0,"m2_amu":2.0,"De_eV":1.0,"re_angstrom":1.0,
                "eta_mode":"modified","N":4,"source":"ignored"}"#,
        )
        .unwrap();
        assert_eq!(f.mu_amu(), 1.0);
        let p = f.to_params().unwrap();
        assert_eq!(p.dimension(), 4);
        assert_eq!(p.eta_mode(), Some(EtaMode::Modified));
    }

    #[test]
    fn molecule_file_with_reduced_mass() {
        let f = MoleculeFile::from_json(
            r#"{"name":"X","mu_amu":0.5,"De_eV":1.0,"re_angstrom":1.0,"eta_mode":"kratzer","N":3}"#,
        )
        .unwrap();
        assert_eq!(f.mass, MassSpec::Reduced { mu_amu: 0.5 });
    }

    #[test]
    fn molecule_file_rejects_bad_eta() {
        let r = MoleculeFile::from_json(
            r#"{"name":"X","mu_amu":0.5,"De_eV":1.0,"re_angstrom":1.0,"eta_mode":"other","N":3}"#,
        );
        assert!(matches!(r, Err(Error::Parse(_))));
    }

    #[test]
    fn bundled_files_parse() {
        assert_eq!(bundled::hcl().name, "HCl");
        assert_eq!(bundled::h2().name, "H2");
        assert!(bundled::by_name("HCl.json").is_some());
        assert!(bundled::by_name("n2").is_none());
    }
}
