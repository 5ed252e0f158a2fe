use rayon::prelude::*;
use serde::Serialize;

use super::{hlf_framed, mean_oscillation, HilbertLogModel, SampledFunction};
use crate::blaschke_arg::AnchoredPoint;
use crate::error::{Error, Result};

/// A place to look for large oscillation: `origin + center`, with `origin`
/// exactly representable (an integer or power of 3) and `center` small.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Probe {
    pub origin: f64,
    pub center: f64,
}

impl Probe {
    pub fn at(x: f64) -> Self {
        Probe {
            origin: 0.0,
            center: x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    /// Half-width of the sampled window around each probe.
    pub half_width: f64,
    pub step: f64,
    /// Length of every interval in the family.
    pub interval_len: f64,
    /// Zeros farther than this from a probe are dropped and bounded.
    pub truncation: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            half_width: 6.0,
            step: 0.01,
            interval_len: 3.0,
            truncation: f64::INFINITY,
        }
    }
}

/// Largest mean oscillation of the model over the length-`interval_len`
/// family, for one member of a model family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub k: u64,
    pub bound: f64,
    /// Witnessing interval in absolute coordinates (rounded near large
    /// origins).
    pub witness: (f64, f64),
    /// Largest possible change of the bound caused by dropped zeros.
    pub tail_bound: f64,
}

struct ProbeResult {
    bound: f64,
    a: f64,
    b: f64,
    tail: f64,
}

fn scan_probe(model: &HilbertLogModel, probe: Probe, cfg: &ScanConfig) -> Result<ProbeResult> {
    let (kept, tail) = if cfg.truncation.is_finite() {
        let mut kept: Vec<AnchoredPoint> = Vec::new();
        let mut dropped = 0.0;
        for p in model.anchored() {
            let dx = p.offset_from(probe.origin) - probe.center;
            let d2 = dx * dx + p.im * p.im;
            if d2.sqrt() <= cfg.truncation {
                kept.push(*p);
            } else {
                // |z - t| >= |z - c|/2 on the window, so phi_z' <= 4 y/|z - c|^2
                // and the oscillation over a length-L interval moves by at
                // most L/2 times that
                dropped += p.mult as f64 * 2.0 * cfg.interval_len * p.im / d2;
            }
        }
        (Some(kept), dropped)
    } else {
        (None, 0.0)
    };
    let local;
    let model = match kept {
        Some(points) => {
            local = HilbertLogModel::from_anchored(model.width, model.theta, points)?;
            &local
        }
        None => model,
    };

    let cells = (2.0 * cfg.half_width / cfg.step).round() as usize;
    let lo = probe.center - cfg.half_width;
    let values: Vec<f64> = (0..=cells)
        .map(|j| hlf_framed(model, probe.origin, lo + j as f64 * cfg.step))
        .collect();
    let f = SampledFunction::new(lo, cfg.step, values)?;

    let anchor_step = cfg.interval_len / 4.0;
    let count = ((2.0 * cfg.half_width - cfg.interval_len) / anchor_step + 1e-9).floor() as usize;
    let mut best = ProbeResult {
        bound: f64::NEG_INFINITY,
        a: 0.0,
        b: 0.0,
        tail,
    };
    for j in 0..=count {
        let a = lo + j as f64 * anchor_step;
        let r = mean_oscillation(&f, a, a + cfg.interval_len)?;
        if r.oscillation > best.bound {
            best.bound = r.oscillation;
            best.a = probe.origin + r.a;
            best.b = probe.origin + r.b;
        }
    }
    Ok(best)
}

/// For each `(k, model)`, the largest mean oscillation of the model samples
/// over intervals of one fixed length placed around every probe.
///
/// With a fixed length the linear term `(T/2) t` contributes the same
/// oscillation `3T/8` (for length 3) to every interval, so growth of the
/// bound along the family comes from the zeros alone.
pub fn theorem_divergence_scan(
    family: &[(u64, HilbertLogModel)],
    probes: &[Probe],
    cfg: &ScanConfig,
) -> Result<Vec<ScanRow>> {
    if probes.is_empty() {
        return Err(Error::Precondition("scan needs at least one probe".into()));
    }
    if !(cfg.step > 0.0 && cfg.interval_len >= 2.0 * cfg.step && cfg.interval_len <= 2.0 * cfg.half_width)
    {
        return Err(Error::Precondition(format!(
            "need 2 step <= interval length <= 2 half-width (got {cfg:?})"
        )));
    }
    if !(cfg.truncation >= 2.0 * cfg.half_width) {
        return Err(Error::TruncationTooSmall {
            given: cfg.truncation,
            required: 2.0 * cfg.half_width,
        });
    }
    family
        .iter()
        .map(|(k, model)| {
            let results = probes
                .par_iter()
                .map(|&p| scan_probe(model, p, cfg))
                .collect::<Result<Vec<_>>>()?;
            let mut best = &results[0];
            for r in &results[1..] {
                if r.bound > best.bound {
                    best = r;
                }
            }
            Ok(ScanRow {
                k: *k,
                bound: best.bound,
                witness: (best.a, best.b),
                tail_bound: results.iter().map(|r| r.tail).fold(0.0, f64::max),
            })
        })
        .collect()
}
