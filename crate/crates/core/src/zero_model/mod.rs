//! Zero sequences in a horizontal strip `0 < alpha <= Im z <= beta`.
//!
//! A [`ZeroSet`] is a finite multiset of points in the upper half-plane,
//! kept sorted by real part. Counting, density, separation and
//! summability diagnostics live in the submodules and are re-exported here.

mod density;
mod io;
mod separation;
mod summability;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use density::{
    lower_density_profile, upper_density_profile, window_count, DensityEntry, DensityProfile,
};
pub use io::{
    load_zero_set, load_zero_set_json, parse_zero_set, write_zero_set_csv, write_zero_set_json,
    DELTA_HEADER,
};
pub use separation::{decompose_uniformly_discrete, separation_constant, Decomposition};
pub use summability::{
    blaschke_sum, blaschke_tails, cartwright_integral_estimate, CartwrightEstimate,
};

fn one() -> u32 {
    1
}

/// A zero `re + i im` with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripPoint {
    pub re: f64,
    pub im: f64,
    #[serde(default = "one")]
    pub mult: u32,
}

impl StripPoint {
    pub fn new(re: f64, im: f64, mult: u32) -> Result<Self> {
        let p = StripPoint { re, im, mult };
        p.validate()?;
        Ok(p)
    }

    /// Simple zero.
    pub fn simple(re: f64, im: f64) -> Result<Self> {
        Self::new(re, im, 1)
    }

    fn validate(&self) -> Result<()> {
        if !self.re.is_finite() || !self.im.is_finite() {
            return Err(Error::Input(format!(
                "non-finite point ({}, {})",
                self.re, self.im
            )));
        }
        if self.im <= 0.0 {
            return Err(Error::NonPositiveIm {
                line: 0,
                value: self.im,
            });
        }
        if self.mult == 0 {
            return Err(Error::Input("multiplicity must be at least 1".into()));
        }
        Ok(())
    }

    /// `|z|^2`
    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn distance(&self, other: &StripPoint) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }
}

/// Finite multiset of strip points sorted by `(re, im, mult)`.
///
/// `alpha` and `beta` are the infimum and supremum of the imaginary parts and
/// are absent for the empty set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ZeroSet {
    points: Vec<StripPoint>,
    bounds: Option<(f64, f64)>,
}

impl ZeroSet {
    pub fn new(mut points: Vec<StripPoint>) -> Result<Self> {
        for p in &points {
            p.validate()?;
        }
        points.sort_by(|a, b| {
            a.re.total_cmp(&b.re)
                .then(a.im.total_cmp(&b.im))
                .then(a.mult.cmp(&b.mult))
        });
        let bounds = points.iter().fold(None, |acc: Option<(f64, f64)>, p| {
            Some(match acc {
                None => (p.im, p.im),
                Some((lo, hi)) => (lo.min(p.im), hi.max(p.im)),
            })
        });
        Ok(ZeroSet { points, bounds })
    }

    pub fn empty() -> Self {
        ZeroSet::default()
    }

    /// Builds a set of simple zeros from `(re, im)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        Self::new(
            pairs
                .into_iter()
                .map(|(re, im)| StripPoint { re, im, mult: 1 })
                .collect(),
        )
    }

    pub fn points(&self) -> &[StripPoint] {
        &self.points
    }

    /// Number of stored points (distinct entries, not counting multiplicity).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of zeros counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.points.iter().map(|p| p.mult as u64).sum()
    }

    pub fn alpha(&self) -> Option<f64> {
        self.bounds.map(|b| b.0)
    }

    pub fn beta(&self) -> Option<f64> {
        self.bounds.map(|b| b.1)
    }

    /// Every point repeated according to its multiplicity, each with `mult = 1`.
    pub fn expanded(&self) -> Vec<StripPoint> {
        self.points
            .iter()
            .flat_map(|p| std::iter::repeat_n(StripPoint { mult: 1, ..*p }, p.mult as usize))
            .collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &ZeroSet) -> ZeroSet {
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points);
        ZeroSet::new(points).expect("union of valid sets is valid")
    }

    /// Translates every point by `i h`.
    pub fn shifted(&self, h: f64) -> Result<ZeroSet> {
        ZeroSet::new(
            self.points
                .iter()
                .map(|p| StripPoint {
                    im: p.im + h,
                    ..*p
                })
                .collect(),
        )
    }

    /// Points with `|z| <= radius`.
    pub fn within_radius(&self, radius: f64) -> impl Iterator<Item = &StripPoint> {
        let r2 = radius * radius;
        self.points.iter().filter(move |p| p.norm_sqr() <= r2)
    }
}
