use std::f64::consts::FRAC_PI_2;

use super::{hilbert_transform_sampled, Grid, SampledFunction};
use crate::blaschke_arg::{phi_sum, phi_sum_framed, AnchoredPoint};
use crate::error::{Error, Result};
use crate::zero_model::{StripPoint, ZeroSet};

/// `H[log|F|](t) = theta + (T/2) t - sum_n phi_{z_n}(t)` for an entire
/// function with zeros `z_n` and indicator diagram of width `T`.
///
/// The zeros are held twice: as a [`ZeroSet`] for absolute evaluation and as
/// anchored points for evaluation in a local frame near large real parts.
#[derive(Debug, Clone)]
pub struct HilbertLogModel {
    pub width: f64,
    pub theta: f64,
    zeros: ZeroSet,
    anchored: Vec<AnchoredPoint>,
}

impl HilbertLogModel {
    pub fn new(width: f64, theta: f64, zeros: ZeroSet) -> Result<Self> {
        let anchored = zeros.points().iter().map(AnchoredPoint::from).collect();
        Self::checked(width, theta, zeros, anchored)
    }

    /// Model whose zeros are given in anchored form. The absolute
    /// [`ZeroSet`] is rounded from `anchor + offset`.
    pub fn from_anchored(width: f64, theta: f64, anchored: Vec<AnchoredPoint>) -> Result<Self> {
        let points = anchored
            .iter()
            .map(|p| StripPoint::new(p.re(), p.im, p.mult))
            .collect::<Result<Vec<_>>>()?;
        Self::checked(width, theta, ZeroSet::new(points)?, anchored)
    }

    fn checked(width: f64, theta: f64, zeros: ZeroSet, anchored: Vec<AnchoredPoint>) -> Result<Self> {
        if !(width >= 0.0) || !width.is_finite() || !theta.is_finite() {
            return Err(Error::Input(format!(
                "model needs finite T >= 0 and finite theta (got T = {width}, theta = {theta})"
            )));
        }
        Ok(HilbertLogModel {
            width,
            theta,
            zeros,
            anchored,
        })
    }

    pub fn zeros(&self) -> &ZeroSet {
        &self.zeros
    }

    pub fn anchored(&self) -> &[AnchoredPoint] {
        &self.anchored
    }
}

/// Value of the model at one point with the bound on omitted zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HlfValue {
    pub value: f64,
    pub tail_bound: f64,
}

pub fn hlf_evaluate(model: &HilbertLogModel, t: f64, truncation_radius: f64) -> Result<HlfValue> {
    let sum = phi_sum(&model.zeros, t, truncation_radius)?;
    Ok(HlfValue {
        value: model.theta + 0.5 * model.width * t - sum.value,
        tail_bound: sum.tail_bound,
    })
}

/// The model at `origin + tau` minus the constant `(T/2) origin`.
///
/// Dropping that constant keeps the linear term at the scale of `tau` when
/// `origin` is huge; oscillation quantities do not see it.
pub fn hlf_framed(model: &HilbertLogModel, origin: f64, tau: f64) -> f64 {
    model.theta + 0.5 * model.width * tau - phi_sum_framed(&model.anchored, origin, tau)
}

/// `-H` applied to samples of the model on `grid`, which recovers `log|F|`
/// up to an additive constant.
pub fn reconstruct_log_modulus(model: &HilbertLogModel, grid: Grid) -> Result<SampledFunction> {
    let samples = grid
        .nodes()
        .map(|t| hlf_evaluate(model, t, f64::INFINITY).map(|v| v.value))
        .collect::<Result<Vec<_>>>()?;
    let hlf = SampledFunction::new(grid.t0, grid.h, samples)?;
    hilbert_transform_sampled(&hlf)?.map(|v| -v)
}

/// A pair `(u, v)` of bounded functions on one grid together with
/// `sup |v|`.
#[derive(Debug, Clone)]
pub struct HsWitness {
    pub u: SampledFunction,
    pub v: SampledFunction,
    pub v_sup: f64,
}

impl HsWitness {
    pub fn new(u: SampledFunction, v: SampledFunction) -> Result<Self> {
        if u.grid() != v.grid() {
            return Err(Error::Input("u and v must share a grid".into()));
        }
        let v_sup = v.values().iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Ok(HsWitness { u, v, v_sup })
    }
}

/// A weight `w = exp(u + Hv)` and its logarithm.
#[derive(Debug, Clone)]
pub struct HelsonSzego {
    pub weight: SampledFunction,
    pub log_weight: SampledFunction,
}

/// Builds `exp(u + Hv)`; refuses unless `sup |v| < pi/2`.
pub fn compose_helson_szego(w: &HsWitness) -> Result<HelsonSzego> {
    if !(w.v_sup < FRAC_PI_2) {
        return Err(Error::HelsonSzego { v_sup: w.v_sup });
    }
    let hv = hilbert_transform_sampled(&w.v)?;
    let log_weight = w.u.combine(1.0, &hv, 1.0)?;
    let weight = log_weight.map(f64::exp)?;
    Ok(HelsonSzego { weight, log_weight })
}
