//! Asymptotic Iteration Method for F″ = λ₀ F′ + s₀ F.
//!
//! The recurrences are the standard AIM ones:
//!
//! ```text
//! λ_k = λ′_{k−1} + s_{k−1} + λ₀ λ_{k−1}
//! s_k = s′_{k−1} + s₀ λ_{k−1}
//! δ_k = λ_k s_{k−1} − λ_{k−1} s_k
//! ```
//!
//! and an eigenvalue is a zero of δ_k(y₀). For the Kummer-type radial
//! equation λ₀ = (2βy − b)/y and s₀ = (βb − 2κ)/y, so all λ_k, s_k are
//! Laurent polynomials in y. β is a numeric trial value; for each trial the
//! recurrences run in exact dyadic arithmetic, which makes the sign of δ_k
//! exact and the bisection on β clean even where δ_k is the tiny difference
//! of two enormous terms.

use std::cmp::Ordering;

use super::{Coefficient, Dyadic, Polynomial, RationalFunction};
use crate::error::{domain, Error, Result};
use crate::kratzer::compute_beta;
use crate::table::Table;

/// The AIM form of the radial Kummer equation at a trial β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AimProblem {
    pub kappa: f64,
    pub gamma: f64,
    pub dimension: u32,
    pub beta: f64,
}

impl AimProblem {
    pub fn new(kappa: f64, gamma: f64, dimension: u32, beta: f64) -> Self {
        Self {
            kappa,
            gamma,
            dimension,
            beta,
        }
    }

    /// b = 2γ + N − 1
    pub fn kummer_b(&self) -> f64 {
        2.0 * self.gamma + self.dimension as f64 - 1.0
    }

    /// λ₀ = (2βy − b)/y
    pub fn lambda0<T: Coefficient>(&self) -> RationalFunction<T> {
        let beta = T::from_f64(self.beta);
        let num = Polynomial::new(vec![-T::from_f64(self.kummer_b()), T::from_i64(2) * beta]);
        RationalFunction::new(num, Polynomial::monomial(T::one(), 1))
            .expect("y is a nonzero denominator")
    }

    /// s₀ = (βb − 2κ)/y
    pub fn s0<T: Coefficient>(&self) -> RationalFunction<T> {
        let c = T::from_f64(self.beta) * T::from_f64(self.kummer_b())
            - T::from_i64(2) * T::from_f64(self.kappa);
        RationalFunction::inverse_power(c, 1)
    }
}

/// Running (λ_k, s_k) together with the previous pair.
struct Recurrence<T> {
    lambda0: RationalFunction<T>,
    s0: RationalFunction<T>,
    lambda: RationalFunction<T>,
    s: RationalFunction<T>,
    prev_lambda: RationalFunction<T>,
    prev_s: RationalFunction<T>,
}

impl<T: Coefficient> Recurrence<T> {
    fn new(problem: &AimProblem) -> Self {
        let lambda0 = problem.lambda0::<T>();
        let s0 = problem.s0::<T>();
        Self {
            lambda: lambda0.clone(),
            s: s0.clone(),
            prev_lambda: lambda0.clone(),
            prev_s: s0.clone(),
            lambda0,
            s0,
        }
    }

    fn step(&mut self) {
        let lambda = &(&self.lambda.derivative() + &self.s) + &(&self.lambda0 * &self.lambda);
        let s = &self.s.derivative() + &(&self.s0 * &self.lambda);
        self.prev_lambda = std::mem::replace(&mut self.lambda, lambda);
        self.prev_s = std::mem::replace(&mut self.s, s);
    }
}

/// δ_k evaluated exactly at y₀, plus the size of the two products it cancels.
struct Termination {
    numerator: Dyadic,
    denominator: Dyadic,
    scale: Dyadic,
}

impl Termination {
    fn at(rec: &Recurrence<Dyadic>, y0: &Dyadic) -> Result<Self> {
        let (nl, dl) = rec.lambda.eval_parts(y0);
        let (nps, dps) = rec.prev_s.eval_parts(y0);
        let (npl, dpl) = rec.prev_lambda.eval_parts(y0);
        let (ns, ds) = rec.s.eval_parts(y0);
        let den = dl.clone() * dps.clone() * dpl.clone() * ds.clone();
        if den.signum() == Ordering::Equal {
            return Err(domain("y0 is a pole of the AIM coefficients"));
        }
        let a = nl * nps * dpl * ds;
        let b = npl * ns * dl * dps;
        Ok(Self {
            numerator: a.clone() - b.clone(),
            denominator: den,
            scale: a.abs() + b.abs(),
        })
    }

    fn sign(&self) -> Ordering {
        match self.denominator.signum() {
            Ordering::Less => self.numerator.signum().reverse(),
            _ => self.numerator.signum(),
        }
    }

    fn value(&self) -> f64 {
        if self.numerator.signum() == Ordering::Equal {
            0.0
        } else {
            self.numerator.ratio_f64(&self.denominator)
        }
    }

    /// |δ_k| relative to the magnitude of its two cancelling products.
    fn relative(&self) -> f64 {
        if self.numerator.signum() == Ordering::Equal {
            0.0
        } else {
            self.numerator.abs().ratio_f64(&self.scale)
        }
    }
}

fn check_y0(y0: f64) -> Result<Dyadic> {
    if !(y0 > 0.0 && y0.is_finite()) {
        return Err(domain(format!(
            "AIM evaluation point must be positive, got {y0}"
        )));
    }
    Ok(Dyadic::from_f64(y0))
}

/// δ_1(y₀), …, δ_{k_max}(y₀), each computed exactly and rounded at the end.
pub fn aim_iterate(problem: &AimProblem, y0: f64, k_max: usize) -> Result<Vec<f64>> {
    if k_max < 1 {
        return Err(domain("k_max must be at least 1"));
    }
    let y = check_y0(y0)?;
    let mut rec = Recurrence::<Dyadic>::new(problem);
    let mut out = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        rec.step();
        out.push(Termination::at(&rec, &y)?.value());
    }
    Ok(out)
}

fn termination(problem: &AimProblem, y0: &Dyadic, k: usize) -> Result<Termination> {
    let mut rec = Recurrence::<Dyadic>::new(problem);
    for _ in 0..k {
        rec.step();
    }
    Termination::at(&rec, y0)
}

/// Root search settings for [`aim_solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct AimOptions {
    /// β search interval; defaults to (1e-9, 1.1·β₀).
    pub bracket: Option<(f64, f64)>,
    pub y0: f64,
    /// Uniform β samples used to locate sign changes of δ_k.
    pub scan_points: usize,
    pub k_start: usize,
    pub k_step: usize,
    pub k_max: usize,
    /// Roots agreeing to this relative tolerance between successive k are converged.
    pub rtol: f64,
}

impl Default for AimOptions {
    fn default() -> Self {
        Self {
            bracket: None,
            y0: 1.0,
            scan_points: 2000,
            k_start: 4,
            k_step: 2,
            k_max: 30,
            rtol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AimResult {
    /// β_n for n = 0..=n_max, descending (ground state first).
    pub roots: Vec<f64>,
    /// Iteration count k at which each root first stopped moving.
    pub iterations_used: Vec<usize>,
    /// |δ_k(y₀; β_n)| relative to its cancelling products, at the final k.
    pub delta_history: Vec<f64>,
    /// Last iteration count evaluated.
    pub k_final: usize,
}

/// Finds the n_max+1 largest zeros of δ_k(y₀; β) in the bracket.
pub fn aim_solve(
    kappa: f64,
    gamma: f64,
    dimension: u32,
    n_max: u32,
    options: &AimOptions,
) -> Result<AimResult> {
    let (lo, hi) = match options.bracket {
        Some(b) => b,
        None => (1e-9, 1.1 * compute_beta(0, kappa, gamma, dimension)?),
    };
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(domain(format!("invalid β bracket ({lo}, {hi})")));
    }
    if options.scan_points < 2 {
        return Err(domain("β scan needs at least 2 points"));
    }
    if options.k_start < 1 || options.k_step < 1 {
        return Err(domain("k_start and k_step must be positive"));
    }
    let y0 = check_y0(options.y0)?;
    let want = n_max as usize + 1;
    let m = options.scan_points;
    let grid: Vec<f64> = (0..m)
        .map(|i| lo + (hi - lo) * i as f64 / (m - 1) as f64)
        .collect();

    let mut history: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut k = options.k_start;
    while k <= options.k_max {
        let roots = scan_roots(kappa, gamma, dimension, &grid, &y0, k, want)?;
        if let Some((_, prev)) = history.last() {
            let stable = prev
                .iter()
                .zip(&roots)
                .take_while(|(a, b)| close(**a, **b, options.rtol))
                .count();
            if stable >= want {
                history.push((k, roots));
                return finish(kappa, gamma, dimension, &y0, &history, want, options.rtol);
            }
        }
        history.push((k, roots));
        k += options.k_step;
    }
    let found = history.last().map_or(0, |(_, r)| r.len());
    Err(Error::Resolution(format!(
        "AIM located {found} stable roots but {want} were requested (k up to {}, {m} scan points); \
         use a finer β scan or a larger k_max",
        options.k_max
    )))
}

fn close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs())
}

fn finish(
    kappa: f64,
    gamma: f64,
    dimension: u32,
    y0: &Dyadic,
    history: &[(usize, Vec<f64>)],
    want: usize,
    rtol: f64,
) -> Result<AimResult> {
    let (k_final, roots) = history.last().expect("history is nonempty");
    let roots: Vec<f64> = roots[..want].to_vec();
    let iterations_used = (0..want)
        .map(|i| {
            // earliest k in the trailing run of agreeing estimates
            let mut first = *k_final;
            for w in history.windows(2).rev() {
                match (w[0].1.get(i), w[1].1.get(i)) {
                    (Some(a), Some(b)) if close(*a, *b, rtol) => first = w[1].0,
                    _ => break,
                }
            }
            first
        })
        .collect();
    let delta_history = roots
        .iter()
        .map(|&b| {
            termination(&AimProblem::new(kappa, gamma, dimension, b), y0, *k_final)
                .map(|t| t.relative())
        })
        .collect::<Result<_>>()?;
    Ok(AimResult {
        roots,
        iterations_used,
        delta_history,
        k_final: *k_final,
    })
}

/// Sign changes of δ_k over the grid, scanned from the top, refined by bisection.
fn scan_roots(
    kappa: f64,
    gamma: f64,
    dimension: u32,
    grid: &[f64],
    y0: &Dyadic,
    k: usize,
    want: usize,
) -> Result<Vec<f64>> {
    let sign_at = |beta: f64| -> Result<Ordering> {
        Ok(termination(&AimProblem::new(kappa, gamma, dimension, beta), y0, k)?.sign())
    };
    let mut roots = Vec::with_capacity(want);
    let mut upper = sign_at(grid[grid.len() - 1])?;
    if upper == Ordering::Equal {
        roots.push(grid[grid.len() - 1]);
    }
    for i in (0..grid.len() - 1).rev() {
        if roots.len() >= want {
            break;
        }
        let lower = sign_at(grid[i])?;
        if lower == Ordering::Equal {
            roots.push(grid[i]);
        } else if upper != Ordering::Equal && lower != upper {
            roots.push(bisect(&sign_at, grid[i], grid[i + 1], lower)?);
        }
        upper = lower;
    }
    Ok(roots)
}

fn bisect<F>(sign_at: &F, mut lo: f64, mut hi: f64, sign_lo: Ordering) -> Result<f64>
where
    F: Fn(f64) -> Result<Ordering>,
{
    // runs to adjacent floats; the sign of δ_k is exact so no noise floor
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match sign_at(mid)? {
            Ordering::Equal => return Ok(mid),
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Side-by-side β table: n, AIM root, closed form, |difference|, iterations.
pub fn comparison_table(
    result: &AimResult,
    kappa: f64,
    gamma: f64,
    dimension: u32,
) -> Result<Table> {
    let mut table = Table::new([
        "n",
        "beta_aim",
        "beta_closed_form",
        "abs_diff",
        "iterations",
    ]);
    for (n, (root, iters)) in result.roots.iter().zip(&result.iterations_used).enumerate() {
        let exact = compute_beta(n as u32, kappa, gamma, dimension)?;
        table.push(vec![
            n.into(),
            (*root).into(),
            exact.into(),
            (root - exact).abs().into(),
            (*iters).into(),
        ]);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kratzer::compute_gamma;

    #[test]
    fn lambda0_and_s0_shapes() {
        let p = AimProblem::new(2.0, 1.0, 3, 0.5);
        let l = p.lambda0::<f64>();
        assert_eq!(l.numerator().coefficients(), &[-4.0, 1.0]);
        assert_eq!(l.denominator().coefficients(), &[0.0, 1.0]);
        let s = p.s0::<f64>();
        assert_eq!(s.numerator().coefficients(), &[2.0 - 4.0]);
    }

    #[test]
    fn exact_root_terminates_at_first_step() {
        // κ=2, γ=1, N=3 gives β₀ = 1, where s₀ vanishes identically
        let deltas = aim_iterate(&AimProblem::new(2.0, 1.0, 3, 1.0), 1.0, 8).unwrap();
        assert!(deltas.iter().all(|d| *d == 0.0));
    }

    #[test]
    fn first_excited_root_terminates_from_k1() {
        let deltas = aim_iterate(&AimProblem::new(2.0, 1.0, 3, 2.0 / 3.0), 1.0, 6).unwrap();
        // β = 2/3 is not exactly representable; δ is rounding-small, not zero
        for d in &deltas {
            assert!(d.abs() < 1e-12, "{deltas:?}");
        }
    }

    #[test]
    fn far_from_roots_delta_stays_large() {
        let deltas = aim_iterate(&AimProblem::new(2.0, 1.0, 3, 10.0), 1.0, 6).unwrap();
        for d in &deltas {
            assert!(d.abs() > 1.0, "{deltas:?}");
        }
    }

    #[test]
    fn iterate_rejects_bad_inputs() {
        let p = AimProblem::new(2.0, 1.0, 3, 1.0);
        assert!(aim_iterate(&p, 0.0, 3).is_err());
        assert!(aim_iterate(&p, -1.0, 3).is_err());
        assert!(aim_iterate(&p, 1.0, 0).is_err());
    }

    #[test]
    fn exact_and_float_recurrences_agree_structurally() {
        let p = AimProblem::new(3.5, 1.3, 3, 0.75);
        let mut a = Recurrence::<f64>::new(&p);
        let mut b = Recurrence::<Dyadic>::new(&p);
        for _ in 0..5 {
            a.step();
            b.step();
            assert_eq!(
                a.lambda.denominator().degree(),
                b.lambda.denominator().degree()
            );
            assert_eq!(a.lambda.numerator().degree(), b.lambda.numerator().degree());
            for (x, y) in
                a.s.numerator()
                    .coefficients()
                    .iter()
                    .zip(b.s.numerator().coefficients())
            {
                assert!((x - y.to_f64()).abs() <= 1e-10 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn solve_kappa_two() {
        let r = aim_solve(2.0, 1.0, 3, 2, &AimOptions::default()).unwrap();
        let expect = [1.0, 2.0 / 3.0, 0.5];
        assert_eq!(r.roots.len(), 3);
        for (a, b) in r.roots.iter().zip(expect) {
            assert!((a - b).abs() / b < 1e-12, "{:?}", r.roots);
        }
        assert!(r.iterations_used.iter().all(|k| *k >= 4 && *k <= r.k_final));
    }

    #[test]
    fn solve_single_root() {
        let kappa = 50.0;
        let gamma = compute_gamma(kappa, 1, 4);
        let r = aim_solve(kappa, gamma, 4, 0, &AimOptions::default()).unwrap();
        let exact = compute_beta(0, kappa, gamma, 4).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn too_coarse_scan_is_a_resolution_error() {
        let opts = AimOptions {
            scan_points: 3,
            ..AimOptions::default()
        };
        let r = aim_solve(2.0, 1.0, 3, 4, &opts);
        assert!(matches!(r, Err(Error::Resolution(_))), "{r:?}");
    }

    #[test]
    fn comparison_table_rows() {
        let r = aim_solve(2.0, 1.0, 3, 1, &AimOptions::default()).unwrap();
        let t = comparison_table(&r, 2.0, 1.0, 3).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.columns[1], "beta_aim");
    }
}
