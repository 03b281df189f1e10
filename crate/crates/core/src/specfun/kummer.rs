use crate::error::{domain, Error, Result};

/// Relative size below which a series term stops the summation.
pub const SERIES_RTOL: f64 = 1e-16;
/// Maximum number of terms summed for a non-terminating series.
pub const SERIES_CAP: usize = 10_000;

/// Rising factorial (x)_j = x (x+1) ... (x+j−1), with (x)_0 = 1.
pub fn pochhammer(x: f64, j: i64) -> Result<f64> {
    if j < 0 {
        return Err(domain(format!(
            "Pochhammer index must be nonnegative, got {j}"
        )));
    }
    Ok((0..j).fold(1.0, |acc, i| acc * (x + i as f64)))
}

/// Arguments of M(a, b, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub a: f64,
    pub b: f64,
    pub z: f64,
}

impl KummerParams {
    pub fn new(a: f64, b: f64, z: f64) -> Self {
        Self { a, b, z }
    }

    /// Some(n) when a = −n for a nonnegative integer n.
    pub fn terminating_degree(&self) -> Option<u32> {
        if self.a <= 0.0 && self.a.fract() == 0.0 && self.a > -(u32::MAX as f64) {
            Some((-self.a) as u32)
        } else {
            None
        }
    }

    fn check_b(&self) -> Result<()> {
        if !self.b.is_finite() || (self.b <= 0.0 && self.b.fract() == 0.0) {
            return Err(domain(format!(
                "Kummer b must not be a nonpositive integer, got {}",
                self.b
            )));
        }
        Ok(())
    }
}

/// Kummer's function M(a, b, z) = Σ (a)_j z^j / (j! (b)_j).
///
/// For a = −n the sum stops exactly at degree n. Otherwise terms are added
/// until one falls below [`SERIES_RTOL`] relative to the partial sum.
pub fn kummer_m(p: &KummerParams) -> Result<f64> {
    p.check_b()?;
    let max_terms = match p.terminating_degree() {
        Some(n) => n as usize + 1,
        None => SERIES_CAP,
    };
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..max_terms - 1 {
        let jf = j as f64;
        term *= (p.a + jf) * p.z / ((p.b + jf) * (jf + 1.0));
        sum += term;
        if p.terminating_degree().is_none() && term.abs() < SERIES_RTOL * sum.abs() {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::Convergence(format!(
                "Kummer series overflowed at term {j} for {p:?}"
            )));
        }
    }
    if p.terminating_degree().is_some() {
        Ok(sum)
    } else {
        Err(Error::Convergence(format!(
            "Kummer series did not converge within {SERIES_CAP} terms for {p:?}"
        )))
    }
}

/// The terminating solution F(y) = M(−n, b, s·y) as an explicit polynomial in y.
///
/// Coefficients are exact products of the series ratios, so derivatives can be
/// taken termwise.
#[derive(Debug, Clone, PartialEq)]
pub struct KummerPolynomial {
    /// Ascending powers of y.
    coeffs: Vec<f64>,
}

impl KummerPolynomial {
    /// `scale` is the factor s in z = s·y (2β for the radial problem).
    pub fn new(n: u32, b: f64, scale: f64) -> Result<Self> {
        KummerParams::new(-(n as f64), b, 0.0).check_b()?;
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = 1.0;
        coeffs.push(c);
        for j in 0..n {
            let jf = j as f64;
            c *= (jf - n as f64) * scale / ((b + jf) * (jf + 1.0));
            coeffs.push(c);
        }
        Ok(Self { coeffs })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| *c != 0.0).unwrap_or(0)
    }

    pub fn value(&self, y: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * y + c)
    }

    pub fn derivative(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (j, c)| acc * y + j as f64 * c)
    }

    pub fn second_derivative(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(2)
            .rev()
            .fold(0.0, |acc, (j, c)| acc * y + (j * (j - 1)) as f64 * c)
    }
}
