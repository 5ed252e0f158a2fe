use rayon::prelude::*;
use serde::Serialize;

use super::SampledFunction;
use crate::error::{Error, Result};

/// Mean value and mean oscillation of a sampled function over `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillationReport {
    pub a: f64,
    pub b: f64,
    pub mean: f64,
    pub oscillation: f64,
}

// slack for interval ends computed by floating arithmetic on the grid
fn grid_slack(f: &SampledFunction) -> f64 {
    1e-9 * f.h()
}

/// Breakpoints of the interpolant on `[a, b]` with their values.
fn restrict(f: &SampledFunction, a: f64, b: f64) -> Vec<(f64, f64)> {
    let h = f.h();
    let first = ((a - f.t0()) / h).floor() as usize + 1;
    let last = ((b - f.t0()) / h).ceil() as usize;
    let mut pts = Vec::with_capacity(last.saturating_sub(first) + 2);
    pts.push((a, f.eval(a)));
    for k in first..last.min(f.len()) {
        let t = f.t(k);
        if t > a && t < b {
            pts.push((t, f.values()[k]));
        }
    }
    pts.push((b, f.eval(b)));
    pts
}

/// `p_I(f) = (1/|I|) int_I |f - f_I|`, with `f_I` the mean of `f` on `I`.
///
/// Both integrals are taken exactly for the linear interpolant: the mean is
/// the trapezoid rule, and `|f - f_I|` is split where it changes sign.
pub fn mean_oscillation(f: &SampledFunction, a: f64, b: f64) -> Result<OscillationReport> {
    let slack = grid_slack(f);
    if !(a >= f.t0() - slack && b <= f.end() + slack) {
        return Err(Error::OutOfGrid {
            a,
            b,
            lo: f.t0(),
            hi: f.end(),
        });
    }
    if !(b - a >= 2.0 * f.h() - slack) {
        return Err(Error::Precondition(format!(
            "interval [{a}, {b}] shorter than two grid steps"
        )));
    }
    let (a, b) = (a.max(f.t0()), b.min(f.end()));
    let pts = restrict(f, a, b);
    let len = b - a;
    let mean = pts
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
        .sum::<f64>()
        / len;
    let dev = pts
        .windows(2)
        .map(|w| {
            let dt = w[1].0 - w[0].0;
            let p = w[0].1 - mean;
            let q = w[1].1 - mean;
            if p * q >= 0.0 {
                0.5 * dt * (p.abs() + q.abs())
            } else {
                0.5 * dt * (p * p + q * q) / (p.abs() + q.abs())
            }
        })
        .sum::<f64>();
    Ok(OscillationReport {
        a,
        b,
        mean,
        oscillation: dev / len,
    })
}

/// Lower bound for the BMO seminorm: the largest mean oscillation over the
/// dyadic family of lengths `min_len * 2^k <= max_len` with left ends
/// stepping by a quarter of the length from the start of the grid. The
/// returned report is the witnessing interval; ties go to the shortest
/// length, then the leftmost interval.
pub fn bmo_estimate(f: &SampledFunction, min_len: f64, max_len: f64) -> Result<OscillationReport> {
    let span = f.end() - f.t0();
    let slack = grid_slack(f);
    if !(min_len >= 2.0 * f.h() - slack && min_len <= max_len && max_len <= span + slack) {
        return Err(Error::Precondition(format!(
            "need 2h <= min_len <= max_len <= span (h = {}, span = {span}, lengths {min_len}..{max_len})",
            f.h()
        )));
    }
    let mut family = Vec::new();
    let mut len = min_len;
    while len <= max_len * (1.0 + 1e-12) {
        let step = len / 4.0;
        let mut j = 0usize;
        loop {
            let a = f.t0() + j as f64 * step;
            if a + len > f.end() + slack {
                break;
            }
            family.push((a, a + len));
            j += 1;
        }
        len *= 2.0;
    }
    family
        .par_iter()
        .enumerate()
        .map(|(idx, &(a, b))| mean_oscillation(f, a, b).map(|r| (idx, r)))
        .try_reduce_with(|x, y| {
            Ok(if y.1.oscillation > x.1.oscillation
                || (y.1.oscillation == x.1.oscillation && y.0 < x.0)
            {
                y
            } else {
                x
            })
        })
        .expect("family is nonempty")
        .map(|(_, r)| r)
}

/// Outcome of the growth-to-oscillation check on `I = [a - 1, a + 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fast2Verdict {
    pub oscillation: f64,
    pub jump: f64,
    pub bound: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// For nondecreasing `g` with `g(a + 1) - g(a) >= M`, checks
/// `p_I(g) >= M / 6` on `I = [a - 1, a + 2]` up to a quadrature tolerance of
/// `2 h M`.
pub fn check_fast2(g: &SampledFunction, a: f64, m: f64) -> Result<Fast2Verdict> {
    if !(m > 0.0) {
        return Err(Error::Precondition(format!("M must be positive, got {m}")));
    }
    let slack = grid_slack(g);
    if !(a - 1.0 >= g.t0() - slack && a + 2.0 <= g.end() + slack) {
        return Err(Error::OutOfGrid {
            a: a - 1.0,
            b: a + 2.0,
            lo: g.t0(),
            hi: g.end(),
        });
    }
    let v = g.values();
    if let Some(k) = (1..v.len()).find(|&k| v[k] < v[k - 1] - 1e-12) {
        return Err(Error::NotMonotone {
            t: g.t(k),
            drop: v[k - 1] - v[k],
        });
    }
    let jump = g.eval(a + 1.0) - g.eval(a);
    if jump < m * (1.0 - 1e-12) {
        return Err(Error::InsufficientJump { jump, required: m });
    }
    let report = mean_oscillation(g, a - 1.0, a + 2.0)?;
    let bound = m / 6.0;
    let tolerance = 2.0 * g.h() * m;
    Ok(Fast2Verdict {
        oscillation: report.oscillation,
        jump,
        bound,
        tolerance,
        pass: report.oscillation >= bound - tolerance,
    })
}
