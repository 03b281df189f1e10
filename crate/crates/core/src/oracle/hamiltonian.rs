use rayon::prelude::*;

use super::TridiagonalMatrix;
use crate::error::{domain, Error, Result};
use crate::kratzer::{energy_level, potential_value, DimensionlessParams};
use crate::molecule::{MoleculeParams, QuantumState};

pub const DEFAULT_POINTS: usize = 20_001;

/// ln(1e-12): how far the reduced-function envelope must fall at the ends.
const ENVELOPE_LOG_DROP: f64 = -27.631;

/// Uniform radial grid including both Dirichlet end points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if points < 3 {
            return Err(Error::Configuration(format!(
                "radial grid needs at least 3 points, got {points}"
            )));
        }
        if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::Configuration(format!(
                "radial grid bounds must satisfy 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            points,
        })
    }

    /// Default grid for a state: the ends sit where y^s e^{−βy} (with s the
    /// small-r exponent of u, plus n at large r) has dropped by 1e-12 from its
    /// peak; r_min never exceeds r_e/50.
    pub fn for_state(params: &MoleculeParams, state: &QuantumState) -> Result<Self> {
        Self::for_state_with_points(params, state, DEFAULT_POINTS)
    }

    pub fn for_state_with_points(
        params: &MoleculeParams,
        state: &QuantumState,
        points: usize,
    ) -> Result<Self> {
        let d = DimensionlessParams::for_state(params, state, 1.0)?;
        let s = d.gamma + (state.dimension as f64 - 1.0) / 2.0;
        let p = s + state.n as f64;
        let y_peak = p / d.beta;
        let ln_env = |y: f64| p * y.ln() - d.beta * y;
        let top = ln_env(y_peak);
        let mut y_max = y_peak.max(1.0);
        while ln_env(y_max) - top > ENVELOPE_LOG_DROP {
            y_max *= 1.02;
        }
        let y_min = (y_peak * (ENVELOPE_LOG_DROP / s).exp()).min(1.0 / 50.0);
        Self::new(y_min * params.re(), y_max * params.re(), points)
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }

    /// Same interval at half the spacing.
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * (self.points - 1) + 1,
            ..*self
        }
    }

    /// Radii of the interior (unknown) points.
    pub fn interior(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (1..self.points - 1).map(move |i| self.r_min + h * i as f64)
    }

    fn check_contains(&self, re: f64) -> Result<()> {
        if !(self.r_min < re && re < self.r_max) {
            return Err(Error::Configuration(format!(
                "grid [{}, {}] must bracket r_e = {re}",
                self.r_min, self.r_max
            )));
        }
        Ok(())
    }
}

/// Sampled effective problem for u(r).
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedRadialProblem {
    /// Λ = l + (N−3)/2; centrifugal term ħ²Λ(Λ+1)/(2μr²).
    pub lambda: f64,
    pub radii: Vec<f64>,
    /// V(r_i) at interior points (J).
    pub potential: Vec<f64>,
    pub mu: f64,
    pub hbar: f64,
}

impl ReducedRadialProblem {
    pub fn new(params: &MoleculeParams, l: u32, grid: &RadialGrid) -> Result<Self> {
        grid.check_contains(params.re())?;
        let lambda = l as f64 + (params.dimension() as f64 - 3.0) / 2.0;
        let radii: Vec<f64> = grid.interior().collect();
        let potential = radii
            .iter()
            .map(|&r| potential_value(r, params))
            .collect::<Result<_>>()?;
        Ok(Self {
            lambda,
            radii,
            potential,
            mu: params.mu(),
            hbar: params.hbar(),
        })
    }

    pub fn centrifugal(&self, r: f64) -> f64 {
        self.hbar * self.hbar * self.lambda * (self.lambda + 1.0) / (2.0 * self.mu * r * r)
    }
}

/// Three-point finite-difference Hamiltonian for u(r).
pub fn build_hamiltonian(
    params: &MoleculeParams,
    l: u32,
    grid: &RadialGrid,
) -> Result<TridiagonalMatrix> {
    let problem = ReducedRadialProblem::new(params, l, grid)?;
    let h = grid.spacing();
    let t = params.hbar() * params.hbar() / (2.0 * params.mu() * h * h);
    let diagonal = problem
        .radii
        .iter()
        .zip(&problem.potential)
        .map(|(&r, v)| 2.0 * t + v + problem.centrifugal(r))
        .collect();
    let off = vec![-t; problem.radii.len() - 1];
    TridiagonalMatrix::new(diagonal, off)
}

/// Energies on both grids and their Richardson combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSolution {
    pub coarse: f64,
    pub fine: f64,
    /// (4 E_{h/2} − E_h)/3
    pub extrapolated: f64,
    pub grid: RadialGrid,
}

pub fn oracle_solve(
    state: &QuantumState,
    params: &MoleculeParams,
    grid: &RadialGrid,
) -> Result<OracleSolution> {
    state.check_against(params)?;
    let needed = state.n as usize + 1;
    if grid.points < needed + 2 {
        return Err(Error::Configuration(format!(
            "grid of {} points cannot resolve eigenvalue index {}",
            grid.points, state.n
        )));
    }
    let threshold = params.threshold();
    let solve = |g: &RadialGrid| -> Result<f64> {
        let e = build_hamiltonian(params, state.l, g)?.eigenvalue(state.n as usize)?;
        if e >= threshold {
            return Err(Error::NotBound {
                energy: e,
                threshold,
            });
        }
        Ok(e)
    };
    let fine_grid = grid.refined();
    let (coarse, fine) = rayon::join(|| solve(grid), || solve(&fine_grid));
    let (coarse, fine) = (coarse?, fine?);
    Ok(OracleSolution {
        coarse,
        fine,
        extrapolated: (4.0 * fine - coarse) / 3.0,
        grid: *grid,
    })
}

/// Richardson-extrapolated finite-difference energy (J).
pub fn oracle_energy(
    state: &QuantumState,
    params: &MoleculeParams,
    grid: &RadialGrid,
) -> Result<f64> {
    Ok(oracle_solve(state, params, grid)?.extrapolated)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationRow {
    pub dimension: u32,
    pub n: u32,
    pub l: u32,
    pub e_closed: f64,
    pub e_oracle: f64,
    pub rel_err: f64,
    pub grid_points: usize,
}

/// Closed form vs oracle for every (N, n, l) with n ≤ n_max, l ≤ l_max.
///
/// Rows come back ordered by N, then n, then l.
pub fn verify(
    params: &MoleculeParams,
    dimensions: &[u32],
    n_max: u32,
    l_max: u32,
    points: usize,
) -> Result<Vec<VerificationRow>> {
    if dimensions.is_empty() {
        return Err(domain("no dimensions requested"));
    }
    let jobs: Vec<(u32, u32, u32)> = dimensions
        .iter()
        .flat_map(|&dim| (0..=n_max).flat_map(move |n| (0..=l_max).map(move |l| (dim, n, l))))
        .collect();
    jobs.par_iter()
        .map(|&(dim, n, l)| {
            let p = params.clone().with_dimension(dim)?;
            let state = QuantumState::new(n, l, dim)?;
            let grid = RadialGrid::for_state_with_points(&p, &state, points)?;
            let e_closed = energy_level(&state, &p)?;
            let e_oracle = oracle_energy(&state, &p, &grid)?;
            Ok(VerificationRow {
                dimension: dim,
                n,
                l,
                e_closed,
                e_oracle,
                rel_err: ((e_oracle - e_closed) / e_closed).abs(),
                grid_points: points,
            })
        })
        .collect()
}
