use crate::error::{domain, Result};

/// Associated Laguerre polynomial L_n^α(x) by the three-term recurrence
///
/// ```text
/// (k+1) L_{k+1} = (2k + 1 + α − x) L_k − (k + α) L_{k−1}
/// ```
///
/// It is tied to the terminating Kummer series by
/// M(−n, α+1, x) = n! / (α+1)_n · L_n^α(x).
pub fn laguerre_from_kummer(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(domain(format!(
            "Laguerre alpha must exceed −1, got {alpha}"
        )));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = alpha + 1.0 - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
