use std::io::{self, Write};

use super::quadrature::integrate;
use super::KummerPolynomial;
use crate::error::{domain, Result};
use crate::kratzer::DimensionlessParams;
use crate::molecule::{MoleculeParams, QuantumState};
use crate::table::format_float;

/// ln(1e-20): envelope drop that marks the end of the integration range.
const TAIL_LOG_DROP: f64 = -46.0;
const NORM_RTOL: f64 = 1e-14;

/// A normalized bound-state radial function R(y) = C y^γ e^{−βy} M(−n, 2γ+N−1, 2βy).
///
/// Normalization is ∫₀^∞ R(y)² y^{N−1} dy = 1 in the dimensionless variable
/// y = r/r_e. The r-space function is R(r/r_e) · r_e^{−N/2}.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    pub state: QuantumState,
    pub beta: f64,
    pub gamma: f64,
    /// C, the prefactor in front of y^γ e^{−βy} F(y).
    pub norm: f64,
    /// (y, R(y)) at the requested grid points.
    pub samples: Vec<(f64, f64)>,
    log_norm: f64,
    poly: KummerPolynomial,
}

impl RadialFunction {
    pub fn value(&self, y: f64) -> f64 {
        if y == 0.0 {
            return if self.gamma == 0.0 { self.norm } else { 0.0 };
        }
        (self.log_norm + self.gamma * y.ln() - self.beta * y).exp() * self.poly.value(y)
    }

    /// The reduced function u(y) = y^{(N−1)/2} R(y).
    pub fn reduced_value(&self, y: f64) -> f64 {
        y.powf((self.state.dimension as f64 - 1.0) / 2.0) * self.value(y)
    }

    /// F(y), the polynomial factor.
    pub fn polynomial(&self) -> &KummerPolynomial {
        &self.poly
    }

    /// Number of strict sign changes across the stored samples, ignoring exact zeros.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self
            .samples
            .iter()
            .filter(|(_, v)| *v != 0.0)
            .map(|(_, v)| *v > 0.0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// CSV dump with header `y,R`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(b"y,R\n")?;
        for (y, r) in &self.samples {
            writeln!(out, "{},{}", format_float(*y), format_float(*r))?;
        }
        Ok(())
    }
}

/// Builds and normalizes the radial function of `state`, sampled on `grid` (values of y).
pub fn radial_wavefunction(
    state: &QuantumState,
    params: &MoleculeParams,
    grid: &[f64],
) -> Result<RadialFunction> {
    if grid.iter().any(|y| !(*y > 0.0 && y.is_finite())) {
        return Err(domain("radial grid points must be positive and finite"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(domain("radial grid must be strictly increasing"));
    }
    let d = DimensionlessParams::for_state(params, state, 1.0)?;
    let b = d.kummer_b(state.dimension);
    let poly = KummerPolynomial::new(state.n, b, 2.0 * d.beta)?;

    // R² y^{N−1} = C² y^b e^{−2βy} F²; envelope peak fixes the log shift
    let ln_env = |y: f64| b * y.ln() - 2.0 * d.beta * y;
    let y_peak = b / (2.0 * d.beta);
    let shift = ln_env(y_peak);
    let y_max = tail_cutoff(b + 2.0 * state.n as f64, 2.0 * d.beta);

    let integrand = |y: f64| {
        let f = poly.value(y);
        (ln_env(y) - shift).exp() * f * f
    };
    let mut total = 0.0;
    let cuts = [0.0, 0.5 * y_peak, y_peak, 0.5 * (y_peak + y_max), y_max];
    for w in cuts.windows(2) {
        total += integrate(integrand, w[0], w[1], NORM_RTOL)?;
    }
    let log_norm = -0.5 * shift - 0.5 * total.ln();

    let mut rf = RadialFunction {
        state: *state,
        beta: d.beta,
        gamma: d.gamma,
        norm: log_norm.exp(),
        samples: Vec::new(),
        log_norm,
        poly,
    };
    rf.samples = grid.iter().map(|&y| (y, rf.value(y))).collect();
    Ok(rf)
}

/// Smallest y beyond the peak of y^p e^{−a y} where the envelope has dropped
/// by e^{TAIL_LOG_DROP}.
fn tail_cutoff(p: f64, a: f64) -> f64 {
    let ln_env = |y: f64| p * y.ln() - a * y;
    let peak = (p / a).max(1e-300);
    let top = ln_env(peak);
    let mut y = peak.max(1.0 / a);
    while ln_env(y) - top > TAIL_LOG_DROP {
        y *= 1.05;
    }
    y
}
