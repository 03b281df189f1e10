#![allow(dead_code)]

use kratzer_core::constants::PhysicalConstants;
use kratzer_core::molecule::bundled;
use kratzer_core::specfun::RadialFunction;
use kratzer_core::{EtaMode, MoleculeParams};

/// μ = D_e = r_e = ħ = 1, so κ = 2.
pub fn kappa2(dimension: u32) -> MoleculeParams {
    natural(1.0, EtaMode::Kratzer, dimension)
}

/// Natural units with μ = r_e = ħ = 1; κ = 2 D_e.
pub fn natural(de: f64, eta: EtaMode, dimension: u32) -> MoleculeParams {
    MoleculeParams::in_units(
        "natural",
        1.0,
        de,
        1.0,
        eta,
        dimension,
        PhysicalConstants::NATURAL,
    )
    .unwrap()
}

pub fn hcl() -> MoleculeParams {
    bundled::hcl().to_params().unwrap()
}

pub fn h2() -> MoleculeParams {
    bundled::h2().to_params().unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Largest y worth sampling: where y^{γ+n} e^{−βy} has fallen by `log_drop` from its peak.
pub fn tail(f: &RadialFunction, log_drop: f64) -> f64 {
    let p = f.gamma + f.state.n as f64 + (f.state.dimension as f64 - 1.0) / 2.0;
    let env = |y: f64| p * y.ln() - f.beta * y;
    let peak = p / f.beta;
    let mut y = peak * 1.01;
    while env(y) - env(peak) > log_drop {
        y *= 1.01;
    }
    y
}

/// Relative residual of the radial equation in y = r/r_e,
///
/// R″ + (N−1)/y R′ − [l(l+N−2)/y² + κ(1 − 1/y)² − κ + β²] R = 0,
///
/// evaluated through R = C y^γ e^{−βy} F with the common prefactor divided out.
/// Normalized by the sum of the magnitudes of the individual terms.
pub fn ode_residual(f: &RadialFunction, kappa: f64, y: f64) -> f64 {
    let n_dim = f.state.dimension as f64;
    let l = f.state.l as f64;
    let p = f.polynomial();
    let (v, d1, d2) = (p.value(y), p.derivative(y), p.second_derivative(y));
    let g = f.gamma / y - f.beta;
    let q =
        l * (l + n_dim - 2.0) / (y * y) + kappa * (1.0 - 1.0 / y).powi(2) - kappa + f.beta * f.beta;
    let terms = [
        (g * g - f.gamma / (y * y)) * v,
        2.0 * g * d1,
        d2,
        (n_dim - 1.0) / y * (g * v + d1),
        -q * v,
    ];
    let sum: f64 = terms.iter().sum();
    let scale: f64 = terms.iter().map(|t| t.abs()).sum();
    (sum / scale).abs()
}

/// Composite Simpson over [a, b] with `intervals` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    assert!(intervals.is_multiple_of(2));
    let h = (b - a) / intervals as f64;
    let mut s = f(a) + f(b);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + h * i as f64);
    }
    s * h / 3.0
}

/// Geometric grid from y_lo to y_hi.
pub fn geometric(y_lo: f64, y_hi: f64, points: usize) -> Vec<f64> {
    let r = (y_hi / y_lo).ln() / (points - 1) as f64;
    (0..points).map(|i| y_lo * (r * i as f64).exp()).collect()
}
