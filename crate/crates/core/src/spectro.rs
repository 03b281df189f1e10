//! Vibration–rotation spectra of the three-dimensional Kratzer oscillator.
//!
//! Levels are labelled spectroscopically: v = n (vibrational), J = l
//! (rotational). Only the fundamental absorption band v = 0 → 1 is generated.
//! Its centre is the (0,0) → (1,0) energy difference, a band origin rather
//! than an allowed line.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::constants::{energy_to_wavenumber, joule_to_ev};
use crate::error::{domain, Error, Result};
use crate::kratzer::{binding_energy, energy_level};
use crate::molecule::{bundled, MoleculeParams, QuantumState};
use crate::table::{format_float, json_string, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// ΔJ = −1
    P,
    /// ΔJ = +1
    R,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::P => f.write_str("P"),
            Branch::R => f.write_str("R"),
        }
    }
}

/// A vibrational–rotational level (v, J).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Level {
    pub v: u32,
    pub j: u32,
}

impl Level {
    pub fn new(v: u32, j: u32) -> Self {
        Self { v, j }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub lower: Level,
    pub upper: Level,
    pub branch: Branch,
    /// cm⁻¹; negative for emission (v' < v).
    pub wavenumber: f64,
}

/// E_{v,J} in J. Spectroscopic labelling only makes sense for N = 3.
pub fn level_energy(v: u32, j: u32, params: &MoleculeParams) -> Result<f64> {
    require_three_dimensions(params)?;
    energy_level(&QuantumState::new(v, j, 3)?, params)
}

fn require_three_dimensions(params: &MoleculeParams) -> Result<()> {
    if params.dimension() != 3 {
        return Err(domain(format!(
            "spectroscopic levels require N = 3, got N = {}",
            params.dimension()
        )));
    }
    Ok(())
}

/// E_{v',J'} − E_{v,J} (J), formed from binding energies so the threshold
/// cancels exactly.
pub fn level_difference(lower: Level, upper: Level, params: &MoleculeParams) -> Result<f64> {
    require_three_dimensions(params)?;
    let depth = |l: Level| binding_energy(&QuantumState::new(l.v, l.j, 3)?, params);
    Ok(depth(lower)? - depth(upper)?)
}

/// Line position in cm⁻¹ for an allowed transition (|Δv| = 1, |ΔJ| = 1).
pub fn transition_wavenumber(
    lower: Level,
    upper: Level,
    params: &MoleculeParams,
) -> Result<Transition> {
    let dv = upper.v as i64 - lower.v as i64;
    let dj = upper.j as i64 - lower.j as i64;
    if dv.abs() != 1 || dj.abs() != 1 {
        return Err(Error::SelectionRule(format!(
            "({},{}) -> ({},{}) has dv = {dv}, dJ = {dj}; need |dv| = 1 and |dJ| = 1",
            lower.v, lower.j, upper.v, upper.j
        )));
    }
    let de = level_difference(lower, upper, params)?;
    Ok(Transition {
        lower,
        upper,
        branch: if dj > 0 { Branch::R } else { Branch::P },
        wavenumber: energy_to_wavenumber(de),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandReport {
    pub molecule: String,
    /// (E_{1,0} − E_{0,0})/hc in cm⁻¹.
    pub center_cm1: f64,
    /// E_{1,0} − E_{0,0} in eV.
    pub center_ev: f64,
    /// (0,J) → (1,J−1) for J = 1..=J_max.
    pub p_branch: Vec<Transition>,
    /// (0,J) → (1,J+1) for J = 0..=J_max.
    pub r_branch: Vec<Transition>,
}

impl BandReport {
    /// P lines (descending J) followed by R lines (ascending J).
    pub fn lines(&self) -> impl Iterator<Item = &Transition> {
        self.p_branch.iter().rev().chain(&self.r_branch)
    }

    /// Columns branch, J_lower, J_upper, wavenumber_cm1.
    pub fn line_table(&self) -> Table {
        let mut t = Table::new(["branch", "J_lower", "J_upper", "wavenumber_cm1"]);
        for line in self.lines() {
            t.push(vec![
                line.branch.to_string().into(),
                (line.lower.j as i64).into(),
                (line.upper.j as i64).into(),
                line.wavenumber.into(),
            ]);
        }
        t
    }
}

/// The v = 0 → 1 absorption band up to rotational level J_max.
pub fn fundamental_band(params: &MoleculeParams, j_max: u32) -> Result<BandReport> {
    if j_max < 1 {
        return Err(domain("J_max must be at least 1"));
    }
    let gap = level_difference(Level::new(0, 0), Level::new(1, 0), params)?;
    let branch = |js: Vec<(u32, u32)>| -> Result<Vec<Transition>> {
        js.into_iter()
            .map(|(jl, ju)| transition_wavenumber(Level::new(0, jl), Level::new(1, ju), params))
            .collect()
    };
    let (p, r) = rayon::join(
        || branch((1..=j_max).map(|j| (j, j - 1)).collect()),
        || branch((0..=j_max).map(|j| (j, j + 1)).collect()),
    );
    Ok(BandReport {
        molecule: params.name().to_string(),
        center_cm1: energy_to_wavenumber(gap),
        center_ev: joule_to_ev(gap),
        p_branch: p?,
        r_branch: r?,
    })
}

/// Theory against a measured band centre.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub molecule: String,
    pub theoretical: f64,
    pub experimental: f64,
    /// experimental / theoretical
    pub ratio: f64,
    pub abs_deviation: f64,
    /// |experimental − theoretical| / experimental
    pub rel_deviation: f64,
    pub more_than_twice: bool,
}

/// Band report as a single JSON object with keys molecule, center_theory,
/// center_theory_eV, center_experiment, ratio, abs_deviation, rel_deviation and
/// flags.more_than_twice. Comparison fields are `null` without a reference value.
pub fn band_report_json(report: &BandReport, comparison: Option<&Comparison>) -> String {
    let opt = |v: Option<f64>| v.map_or_else(|| "null".to_string(), format_float);
    let flag = comparison.map_or_else(|| "null".to_string(), |c| c.more_than_twice.to_string());
    format!(
        "{{\"molecule\":{},\"center_theory\":{},\"center_theory_eV\":{},\"center_experiment\":{},\
         \"ratio\":{},\"abs_deviation\":{},\"rel_deviation\":{},\"flags\":{{\"more_than_twice\":{}}}}}\n",
        json_string(&report.molecule),
        format_float(report.center_cm1),
        format_float(report.center_ev),
        opt(comparison.map(|c| c.experimental)),
        opt(comparison.map(|c| c.ratio)),
        opt(comparison.map(|c| c.abs_deviation)),
        opt(comparison.map(|c| c.rel_deviation)),
        flag
    )
}

pub fn compare_experiment(report: &BandReport, experimental_center: f64) -> Result<Comparison> {
    if !(experimental_center > 0.0 && experimental_center.is_finite()) {
        return Err(domain(format!(
            "experimental band centre must be positive, got {experimental_center}"
        )));
    }
    let theoretical = report.center_cm1;
    let ratio = experimental_center / theoretical;
    let abs_deviation = (experimental_center - theoretical).abs();
    Ok(Comparison {
        molecule: report.molecule.clone(),
        theoretical,
        experimental: experimental_center,
        ratio,
        abs_deviation,
        rel_deviation: abs_deviation / experimental_center,
        more_than_twice: ratio > 2.0,
    })
}

/// Measured fundamental band centres keyed by molecule name.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct ExperimentalData {
    #[serde(default)]
    pub source: String,
    pub band_centers_cm1: BTreeMap<String, f64>,
}

impl ExperimentalData {
    pub fn bundled() -> Self {
        Self::from_json(bundled::EXPERIMENTAL_JSON).expect("bundled experimental.json is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Case-insensitive lookup.
    pub fn center(&self, molecule: &str) -> Option<f64> {
        self.band_centers_cm1
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(molecule))
            .map(|(_, v)| *v)
    }
}
