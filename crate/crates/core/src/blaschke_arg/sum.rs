use super::{phi, phi_offset};
use crate::error::{Error, Result};
use crate::zero_model::{blaschke_tails, ZeroSet};

const LEAF: usize = 64;

/// Pairwise summation over a fixed binary tree. The tree depends only on the
/// slice length, so the parallel and serial results are bit-identical.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= LEAF {
        return xs.iter().sum();
    }
    let (l, r) = xs.split_at(xs.len() / 2);
    if xs.len() >= 1 << 14 {
        let (a, b) = rayon::join(|| pairwise_sum(l), || pairwise_sum(r));
        a + b
    } else {
        pairwise_sum(l) + pairwise_sum(r)
    }
}

/// `Phi(t) = sum mult * phi_z(t)` over the zeros with `|z| <= R`, and a bound
/// on what the omitted zeros contribute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiSumResult {
    pub value: f64,
    pub truncation_radius: f64,
    pub tail_bound: f64,
}

/// Omitted zeros have `|z| > R > 2|t|`, where `phi_z(t) = psi_z(t)` and
/// `|psi_z(t)| <= 2 |t| Im z / |z|^2`. The tail bound is therefore
/// `2 |t|` times the Blaschke remainder beyond `R`.
pub const TAIL_CONSTANT: f64 = 2.0;

/// `R = f64::INFINITY` sums every zero and reports a zero tail.
pub fn phi_sum(zs: &ZeroSet, t: f64, truncation_radius: f64) -> Result<PhiSumResult> {
    let required = 2.0 * t.abs();
    if !(truncation_radius > required) {
        return Err(Error::TruncationTooSmall {
            given: truncation_radius,
            required,
        });
    }
    let r2 = truncation_radius * truncation_radius;
    let terms: Vec<f64> = zs
        .points()
        .iter()
        .filter(|p| p.norm_sqr() <= r2)
        .map(|p| p.mult as f64 * phi(p, t).value)
        .collect();
    let tail_bound = if truncation_radius.is_finite() {
        debug_assert!(zs
            .points()
            .iter()
            .filter(|p| p.norm_sqr() > r2)
            .all(|p| p.re == 0.0 || t.abs() < p.norm_sqr() / p.re.abs()));
        TAIL_CONSTANT * t.abs() * blaschke_tails(zs, &[truncation_radius])[0]
    } else {
        0.0
    };
    Ok(PhiSumResult {
        value: pairwise_sum(&terms),
        truncation_radius,
        tail_bound,
    })
}

/// A zero stored as `anchor + offset`, where `anchor` is an exactly
/// representable reference point (an integer below `2^53`, e.g. `3^k`) and
/// `offset` is small. Differences of anchors are exact, so offsets from a
/// frame origin keep full precision however large the anchor is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnchoredPoint {
    pub anchor: f64,
    pub offset: f64,
    pub im: f64,
    pub mult: u32,
}

impl AnchoredPoint {
    pub fn re(&self) -> f64 {
        self.anchor + self.offset
    }

    /// `Re z - origin`, accurate when both anchor and origin are exact.
    pub fn offset_from(&self, origin: f64) -> f64 {
        (self.anchor - origin) + self.offset
    }
}

impl From<&crate::zero_model::StripPoint> for AnchoredPoint {
    fn from(p: &crate::zero_model::StripPoint) -> Self {
        AnchoredPoint {
            anchor: 0.0,
            offset: p.re,
            im: p.im,
            mult: p.mult,
        }
    }
}

/// `Phi(origin + tau)` over all points, evaluated from offsets relative to
/// the frame origin so clusters near large anchors resolve at scale `tau`.
pub fn phi_sum_framed(points: &[AnchoredPoint], origin: f64, tau: f64) -> f64 {
    let terms: Vec<f64> = points
        .iter()
        .map(|p| {
            let u = tau - p.offset_from(origin);
            p.mult as f64 * phi_offset(p.re(), p.im, u)
        })
        .collect();
    pairwise_sum(&terms)
}
