//! Adaptive composite Gauss–Legendre quadrature.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const ORDER: usize = 12;
const MAX_DEPTH: u32 = 48;

/// Nodes and weights on [−1, 1], found by Newton iteration on P_ORDER.
fn rule() -> &'static [(f64, f64); ORDER] {
    static RULE: OnceLock<[(f64, f64); ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut out = [(0.0, 0.0); ORDER];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            dp = if d != 0.0 { d } else { dp };
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        out
    })
}

/// P_n(x) and P_n'(x).
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn fixed<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    half * rule()
        .iter()
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
}

/// ∫_a^b f, bisecting panels until two-level estimates agree to `rtol`
/// relative to the running magnitude of the integral.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rtol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let whole = fixed(&f, a, b);
    // scale guards against false convergence on panels where f is tiny
    let scale = whole.abs().max(f64::MIN_POSITIVE);
    recurse(&f, a, b, whole, rtol, scale, 0)
}

fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    rtol: f64,
    scale: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = fixed(f, a, m);
    let right = fixed(f, m, b);
    let sum = left + right;
    if !sum.is_finite() {
        return Err(Error::Convergence(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    if (sum - whole).abs() <= rtol * scale.max(sum.abs()) {
        return Ok(sum);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Convergence(format!(
            "adaptive quadrature exceeded depth {MAX_DEPTH} on [{a}, {b}]"
        )));
    }
    Ok(recurse(f, a, m, left, rtol, scale, depth + 1)?
        + recurse(f, m, b, right, rtol, scale, depth + 1)?)
}
