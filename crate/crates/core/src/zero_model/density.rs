use rayon::prelude::*;
use serde::Serialize;

use super::ZeroSet;
use crate::error::{Error, Result};

/// One row of a density profile: the extremal multiplicity-weighted count
/// over windows `[x, x + r)` and the anchor `x` realizing it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityEntry {
    pub r: f64,
    pub count: u64,
    pub density: f64,
    pub anchor: f64,
}

/// Window length to normalized extremal count, for increasing lengths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityProfile {
    pub entries: Vec<DensityEntry>,
}

impl DensityProfile {
    pub fn densities(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.density).collect()
    }
}

/// Real parts with accumulated multiplicity, plus prefix sums, so a window
/// count is two binary searches.
struct CountIndex {
    re: Vec<f64>,
    prefix: Vec<u64>,
}

impl CountIndex {
    fn new(zs: &ZeroSet) -> Self {
        let mut re: Vec<f64> = Vec::with_capacity(zs.len());
        let mut weight: Vec<u64> = Vec::with_capacity(zs.len());
        for p in zs.points() {
            match re.last() {
                Some(&last) if last == p.re => *weight.last_mut().unwrap() += p.mult as u64,
                _ => {
                    re.push(p.re);
                    weight.push(p.mult as u64);
                }
            }
        }
        let mut prefix = Vec::with_capacity(weight.len() + 1);
        prefix.push(0);
        let mut acc = 0;
        for w in weight {
            acc += w;
            prefix.push(acc);
        }
        CountIndex { re, prefix }
    }

    /// Weighted count of `re` in `[x, x + r)`.
    fn count(&self, x: f64, r: f64) -> u64 {
        let end = x + r;
        let lo = self.re.partition_point(|&v| v < x);
        let hi = self.re.partition_point(|&v| v < end);
        self.prefix[hi.max(lo)] - self.prefix[lo]
    }

    /// Jump points of `x -> count(x, r)`: the sup and inf over any range of
    /// `x` are attained on these or on the range endpoints.
    fn candidates(&self, r: f64) -> Vec<f64> {
        let mut c: Vec<f64> = self
            .re
            .iter()
            .flat_map(|&v| [v, v - r])
            .collect();
        c.sort_by(f64::total_cmp);
        c.dedup();
        c
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Precondition(format!(
            "window length must be positive and finite, got {r}"
        )));
    }
    Ok(())
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::Precondition("radii list is empty".into()));
    }
    for r in radii {
        check_radius(*r)?;
    }
    if radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(
            "radii must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Multiplicity-weighted number of points with real part in `[x, x + r)`.
pub fn window_count(zs: &ZeroSet, x: f64, r: f64) -> Result<u64> {
    check_radius(r)?;
    Ok(CountIndex::new(zs).count(x, r))
}

// Deterministic reduction: larger count wins, ties go to the smaller anchor.
fn pick_max(a: (u64, f64), b: (u64, f64)) -> (u64, f64) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

fn pick_min(a: (u64, f64), b: (u64, f64)) -> (u64, f64) {
    if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// For each window length `r`, the supremum over `x` of
/// `window_count(x, r) / r`.
///
/// The count is piecewise constant in `x` with jumps at `re_i` and
/// `re_i - r`, so scanning those anchors gives the exact supremum.
pub fn upper_density_profile(zs: &ZeroSet, radii: &[f64]) -> Result<DensityProfile> {
    if zs.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    check_radii(radii)?;
    let index = CountIndex::new(zs);
    let entries = radii
        .iter()
        .map(|&r| {
            let (count, anchor) = index
                .candidates(r)
                .par_iter()
                .map(|&x| (index.count(x, r), x))
                .reduce(|| (0, f64::INFINITY), pick_max);
            DensityEntry {
                r,
                count,
                density: count as f64 / r,
                anchor,
            }
        })
        .collect();
    Ok(DensityProfile { entries })
}

/// Infimum counterpart of [`upper_density_profile`], with `x` restricted to
/// windows lying inside the hull `[min re, max re]` of the data (outside it
/// every count is trivially zero). Lengths longer than the hull are skipped.
pub fn lower_density_profile(zs: &ZeroSet, radii: &[f64]) -> Result<DensityProfile> {
    if zs.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    check_radii(radii)?;
    let index = CountIndex::new(zs);
    let lo = index.re[0];
    let hi = *index.re.last().unwrap();
    let entries = radii
        .iter()
        .filter(|&&r| lo + r <= hi)
        .map(|&r| {
            let mut cands: Vec<f64> = index
                .candidates(r)
                .into_iter()
                .filter(|&x| x >= lo && x + r <= hi)
                .collect();
            cands.push(lo);
            cands.push(hi - r);
            let (count, anchor) = cands
                .par_iter()
                .map(|&x| (index.count(x, r), x))
                .reduce(|| (u64::MAX, f64::INFINITY), pick_min);
            DensityEntry {
                r,
                count,
                density: count as f64 / r,
                anchor,
            }
        })
        .collect();
    Ok(DensityProfile { entries })
}
