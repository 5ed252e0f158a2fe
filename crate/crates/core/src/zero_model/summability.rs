use super::ZeroSet;
use crate::error::{Error, Result};

/// `sum mult * Im z / |z|^2`, the Blaschke sum of the set.
pub fn blaschke_sum(zs: &ZeroSet) -> f64 {
    zs.points()
        .iter()
        .map(|p| p.mult as f64 * p.im / p.norm_sqr())
        .sum()
}

/// For each radius `R`, the part of the Blaschke sum over `|z| > R`.
pub fn blaschke_tails(zs: &ZeroSet, radii: &[f64]) -> Vec<f64> {
    let mut terms: Vec<(f64, f64)> = zs
        .points()
        .iter()
        .map(|p| (p.norm_sqr(), p.mult as f64 * p.im / p.norm_sqr()))
        .collect();
    // largest modulus first so each tail is a prefix sum
    terms.sort_by(|a, b| b.0.total_cmp(&a.0));
    radii
        .iter()
        .map(|&r| {
            let r2 = r * r;
            terms
                .iter()
                .take_while(|(n2, _)| *n2 > r2)
                .map(|(_, t)| t)
                .sum()
        })
        .collect()
}

/// Trapezoid estimate of `int_{-R}^{R} max(log|F|, 0) / (1 + x^2) dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartwrightEstimate {
    pub value: f64,
    pub radius: f64,
    pub nodes: usize,
    /// Nodes where the log-modulus was not finite and was skipped.
    pub skipped: usize,
}

/// Nodes where `log_modulus` is not finite (typically `-inf` at a real zero)
/// contribute nothing; more than 1% of such nodes is an error.
pub fn cartwright_integral_estimate<F>(
    log_modulus: F,
    radius: f64,
    grid_step: f64,
) -> Result<CartwrightEstimate>
where
    F: Fn(f64) -> f64,
{
    if !(radius > 0.0) || !(grid_step > 0.0) {
        return Err(Error::Precondition(format!(
            "radius and grid step must be positive (R = {radius}, step = {grid_step})"
        )));
    }
    let cells = (2.0 * radius / grid_step).ceil().max(1.0) as usize;
    let h = 2.0 * radius / cells as f64;
    let mut skipped = 0usize;
    let mut sum = 0.0;
    for k in 0..=cells {
        let x = -radius + k as f64 * h;
        let v = log_modulus(x);
        if !v.is_finite() {
            skipped += 1;
            continue;
        }
        let w = if k == 0 || k == cells { 0.5 } else { 1.0 };
        sum += w * v.max(0.0) / (1.0 + x * x);
    }
    let nodes = cells + 1;
    if skipped * 100 > nodes {
        return Err(Error::Singular(format!(
            "{skipped} of {nodes} nodes are non-finite (budget 1%)"
        )));
    }
    Ok(CartwrightEstimate {
        value: sum * h,
        radius,
        nodes,
        skipped,
    })
}
