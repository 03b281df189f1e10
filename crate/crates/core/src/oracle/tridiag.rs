//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

use crate::error::{domain, Error, Result};

/// Relative accuracy targeted by the bisection.
pub const EIGEN_RTOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl TridiagonalMatrix {
    /// `off_diagonal` holds the n−1 sub/super-diagonal entries.
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Result<Self> {
        if diagonal.is_empty() {
            return Err(domain("tridiagonal matrix must have order at least 1"));
        }
        if off_diagonal.len() + 1 != diagonal.len() {
            return Err(domain(format!(
                "off-diagonal length {} inconsistent with order {}",
                off_diagonal.len(),
                diagonal.len()
            )));
        }
        if diagonal.iter().chain(&off_diagonal).any(|v| !v.is_finite()) {
            return Err(domain("tridiagonal entries must be finite"));
        }
        Ok(Self {
            diagonal,
            off_diagonal,
        })
    }

    pub fn order(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    /// Number of eigenvalues strictly below `sigma` (negative pivots of the
    /// LDLᵀ factorization of T − σI).
    pub fn sturm_count(&self, sigma: f64) -> usize {
        let pivmin = self.pivot_floor();
        let mut count = 0;
        let mut q = self.diagonal[0] - sigma;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for (d, e) in self.diagonal[1..].iter().zip(&self.off_diagonal) {
            q = (d - sigma) - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn pivot_floor(&self) -> f64 {
        let emax = self.off_diagonal.iter().fold(0.0f64, |m, e| m.max(e * e));
        f64::MIN_POSITIVE * emax.max(1.0)
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.order();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.off_diagonal[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.off_diagonal[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }

    /// The `index`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, index: usize) -> Result<f64> {
        if index >= self.order() {
            return Err(domain(format!(
                "eigenvalue index {index} out of range for order {}",
                self.order()
            )));
        }
        let (g_lo, g_hi) = self.gershgorin();
        let span = g_hi - g_lo;
        let mut lo = g_lo - 1e-12 * span.max(f64::MIN_POSITIVE) - f64::MIN_POSITIVE;
        let mut hi = g_hi + 1e-12 * span.max(f64::MIN_POSITIVE) + f64::MIN_POSITIVE;
        if self.sturm_count(lo) > index || self.sturm_count(hi) <= index {
            return Err(Error::Internal(format!(
                "Sturm bisection failed to bracket eigenvalue {index}"
            )));
        }
        let abs_floor = 2.0 * f64::EPSILON * g_lo.abs().max(g_hi.abs());
        for _ in 0..2000 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= (EIGEN_RTOL * mid.abs()).max(abs_floor) || mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// The `count` smallest eigenvalues, ascending.
    pub fn eigen_lowest(&self, count: usize) -> Result<Vec<f64>> {
        if count == 0 || count > self.order() {
            return Err(domain(format!(
                "requested {count} eigenvalues from a matrix of order {}",
                self.order()
            )));
        }
        (0..count).map(|i| self.eigenvalue(i)).collect()
    }

    /// Unit eigenvector for an eigenvalue estimate, by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.order();
        let (g_lo, g_hi) = self.gershgorin();
        // nudge off the exact eigenvalue so the shifted system stays solvable
        let shift = lambda - 1e-12 * (g_hi - g_lo);
        let mut x = vec![1.0; n];
        for _ in 0..3 {
            x = self.solve_shifted(shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }

    /// Solves (T − σI) x = rhs with the Thomas algorithm.
    fn solve_shifted(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.order();
        let tiny = self.pivot_floor();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut pivot = self.diagonal[0] - sigma;
        if pivot.abs() < tiny {
            pivot = tiny;
        }
        if n > 1 {
            c[0] = self.off_diagonal[0] / pivot;
        }
        d[0] = rhs[0] / pivot;
        for i in 1..n {
            let e = self.off_diagonal[i - 1];
            pivot = self.diagonal[i] - sigma - e * c[i - 1];
            if pivot.abs() < tiny {
                pivot = tiny;
            }
            if i + 1 < n {
                c[i] = self.off_diagonal[i] / pivot;
            }
            d[i] = (rhs[i] - e * d[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix() {
        let m = TridiagonalMatrix::new(vec![3.0, 1.0, 2.0], vec![0.0, 0.0]).unwrap();
        let ev = m.eigen_lowest(2).unwrap();
        for (a, b) in ev.iter().zip([1.0, 2.0]) {
            assert!((a - b).abs() <= EIGEN_RTOL * b, "{ev:?}");
        }
    }

    #[test]
    fn second_difference_stencil() {
        let m = TridiagonalMatrix::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        let ev = m.eigen_lowest(3).unwrap();
        let s2 = 2f64.sqrt();
        for (a, b) in ev.iter().zip([2.0 - s2, 2.0, 2.0 + s2]) {
            assert!((a - b).abs() < 1e-13, "{ev:?}");
        }
    }

    #[test]
    fn rejects_inconsistent_lengths() {
        assert!(TridiagonalMatrix::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(TridiagonalMatrix::new(vec![], vec![]).is_err());
    }

    #[test]
    fn count_bounds() {
        let m = TridiagonalMatrix::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        assert!(m.eigen_lowest(0).is_err());
        assert!(m.eigen_lowest(4).is_err());
        assert_eq!(m.sturm_count(-10.0), 0);
        assert_eq!(m.sturm_count(10.0), 3);
    }

    #[test]
    fn inverse_iteration_vector() {
        let m = TridiagonalMatrix::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        let lambda = m.eigenvalue(0).unwrap();
        let v = m.eigenvector(lambda);
        // (1, √2, 1)/2 up to sign
        let s = v[0].signum();
        for (a, b) in v.iter().zip([0.5, 0.5 * 2f64.sqrt(), 0.5]) {
            assert!((s * a - b).abs() < 1e-8, "{v:?}");
        }
    }
}
