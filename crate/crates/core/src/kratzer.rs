//! Kratzer potential and the closed-form chain κ → γ → β → E.
//!
//! The radial equation for `R(r)` in N dimensions, written in `y = r/r_e`, is
//! turned into Kummer's equation by `R(y) = y^γ e^{−βy} F(y)`. Its indicial
//! exponent is
//!
//! ```text
//! γ = (2 − N)/2 + sqrt(κ + (l + (N − 2)/2)²)
//! ```
//!
//! which makes the Kummer parameter `b = 2γ + N − 1` strictly positive and
//! reduces to γ = l for κ → 0, N = 3.

use crate::error::{domain, Result};
use crate::molecule::{MoleculeParams, QuantumState};

/// V(r) = D_e ((r − r_e)/r)² + η, in J.
pub fn potential_value(r: f64, params: &MoleculeParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    let x = (r - params.re()) / r;
    Ok(params.de() * x * x + params.eta())
}

/// κ = 2 μ D_e r_e² / ħ².
pub fn compute_kappa(params: &MoleculeParams) -> f64 {
    let hbar = params.hbar();
    2.0 * params.mu() * params.de() * params.re() * params.re() / (hbar * hbar)
}

/// Indicial exponent γ = (2 − N)/2 + sqrt(κ + (l + (N − 2)/2)²).
pub fn compute_gamma(kappa: f64, l: u32, dimension: u32) -> f64 {
    let half = (dimension as f64 - 2.0) / 2.0;
    let lam = l as f64 + half;
    -half + (kappa + lam * lam).sqrt()
}

/// β_{nl} = κ / (n + γ + (N − 1)/2).
pub fn compute_beta(n: u32, kappa: f64, gamma: f64, dimension: u32) -> Result<f64> {
    let denom = n as f64 + gamma + (dimension as f64 - 1.0) / 2.0;
    if !(denom > 0.0) {
        return Err(domain(format!(
            "n + γ + (N−1)/2 must be positive, got {denom} (n={n}, γ={gamma}, N={dimension})"
        )));
    }
    Ok(kappa / denom)
}

/// Bound-state energy in J:
/// `E = D_e + η − κ D_e / [n + 1/2 + sqrt(κ + (l + (N−2)/2)²)]²`.
pub fn energy_level(state: &QuantumState, params: &MoleculeParams) -> Result<f64> {
    state.check_against(params)?;
    let kappa = compute_kappa(params);
    Ok(params.threshold() - binding(kappa, state.n, state.effective_l(), params.de()))
}

/// Depth of the level below the dissociation threshold (J), independent of η.
pub fn binding_energy(state: &QuantumState, params: &MoleculeParams) -> Result<f64> {
    state.check_against(params)?;
    Ok(binding(
        compute_kappa(params),
        state.n,
        state.effective_l(),
        params.de(),
    ))
}

/// κ D_e / [n + 1/2 + sqrt(κ + λ²)]².
fn binding(kappa: f64, n: u32, effective_l: f64, de: f64) -> f64 {
    let d = n as f64 + 0.5 + (kappa + effective_l * effective_l).sqrt();
    kappa * de / (d * d)
}

/// Inverts β² = 2 μ r_e² (D_e − E + η)/ħ² for E (J).
pub fn energy_from_beta(beta: f64, params: &MoleculeParams) -> f64 {
    let kappa = compute_kappa(params);
    params.threshold() - beta * beta * params.de() / kappa
}

/// The dimensionless quantities shared by the Kummer problem and the AIM.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    pub kappa: f64,
    pub gamma: f64,
    pub beta: f64,
    /// r / r_e
    pub y: f64,
}

impl DimensionlessParams {
    pub fn for_state(params: &MoleculeParams, state: &QuantumState, y: f64) -> Result<Self> {
        state.check_against(params)?;
        let kappa = compute_kappa(params);
        let gamma = compute_gamma(kappa, state.l, state.dimension);
        let beta = compute_beta(state.n, kappa, gamma, state.dimension)?;
        Ok(Self {
            kappa,
            gamma,
            beta,
            y,
        })
    }

    /// b = 2γ + N − 1, the second Kummer parameter.
    pub fn kummer_b(&self, dimension: u32) -> f64 {
        2.0 * self.gamma + dimension as f64 - 1.0
    }
}
