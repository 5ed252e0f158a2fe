use std::f64::consts::PI;

use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::{Grid, SampledFunction};
use crate::error::{Error, Result};

/// Quadrature controls for [`hilbert_transform_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilbertOptions {
    /// Half-width of the integration range around `x`.
    pub window: f64,
    /// Radius of the symmetric neighbourhood of `x` that is handled by a
    /// first-order odd-part model instead of quadrature.
    pub excision: f64,
    /// Absolute tolerance for the adaptive quadrature.
    pub tolerance: f64,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            window: 1e4,
            excision: 1e-4,
            tolerance: 1e-9,
        }
    }
}

const MAX_DEPTH: u32 = 48;
const MIN_DEPTH: u32 = 2;
const PANELS_PER_DECADE: usize = 16;
const MAX_PANEL: f64 = 1.0;

fn regularizer(t: f64) -> f64 {
    t / (1.0 + t * t)
}

fn checked(f: &impl Fn(f64) -> f64, t: f64) -> Result<f64> {
    let v = f(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { t, value: v })
    }
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<G: Fn(f64) -> Result<f64>>(
    g: &G,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = g(lm)?;
    let frm = g(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let diff = left + right - whole;
    if depth >= MAX_DEPTH || (depth >= MIN_DEPTH && diff.abs() <= 15.0 * tol) {
        return Ok(left + right + diff / 15.0);
    }
    Ok(simpson_step(g, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?
        + simpson_step(g, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?)
}

fn adaptive_simpson<G: Fn(f64) -> Result<f64>>(g: &G, a: f64, b: f64, tol: f64) -> Result<f64> {
    let fa = g(a)?;
    let fb = g(b)?;
    let fm = g(0.5 * (a + b))?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(g, a, b, fa, fm, fb, whole, tol, 0)
}

/// Panel edges from `lo` to `hi`: geometric within each decade, then split
/// so no panel is longer than `MAX_PANEL`.
fn panels(lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let decades = (hi / lo).log10();
    let count = ((decades * PANELS_PER_DECADE as f64).ceil() as usize).max(1);
    let ratio = (hi / lo).powf(1.0 / count as f64);
    let mut out = Vec::new();
    let mut a = lo;
    for k in 0..count {
        let b = if k + 1 == count { hi } else { a * ratio };
        let pieces = ((b - a) / MAX_PANEL).ceil().max(1.0) as usize;
        let w = (b - a) / pieces as f64;
        for j in 0..pieces {
            let pa = a + j as f64 * w;
            let pb = if j + 1 == pieces { b } else { pa + w };
            out.push((pa, pb));
        }
        a = b;
    }
    out
}

fn integrate_panels<G: Fn(f64) -> Result<f64> + Sync>(
    g: &G,
    edges: &[(f64, f64)],
    span: f64,
    tol: f64,
) -> Result<f64> {
    let parts: Vec<f64> = edges
        .par_iter()
        .map(|&(a, b)| adaptive_simpson(g, a, b, tol * ((b - a) / span).max(1e-4)))
        .collect::<Result<_>>()?;
    Ok(crate::blaschke_arg::pairwise_sum(&parts))
}

/// Regularized Hilbert transform of a bounded function at one point, with the
/// default tolerance. See [`hilbert_transform_with`].
pub fn hilbert_transform<F>(f: F, x: f64, window: f64, excision: f64) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    hilbert_transform_with(
        f,
        x,
        &HilbertOptions {
            window,
            excision,
            ..HilbertOptions::default()
        },
    )
}

/// Regularized Hilbert transform of a bounded function at one point.
///
/// Writing `t = x +- s` folds the integral onto `s > 0`:
///
/// ```text
/// pi Hf(x) = int_0^inf (f(x-s) - f(x+s))/s + f(x+s) k(x+s) + f(x-s) k(x-s) ds,
/// k(t) = t/(1+t^2).
/// ```
///
/// The odd part is bounded near `s = 0` for Lipschitz `f`; on `(0, excision)`
/// it is replaced by its linear model `f(x - e) - f(x + e)`. The range
/// `(excision, window)` is integrated by adaptive Simpson over panels that
/// are geometric per decade. Beyond the window `f` is replaced on each side
/// by its mean over the outer half of the window, whose contribution has a
/// closed form. A second evaluation at half the excision radius is compared
/// and a warning logged if they differ by more than `1e-6`.
pub fn hilbert_transform_with<F>(f: F, x: f64, opts: &HilbertOptions) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    let HilbertOptions {
        window: s_max,
        excision: e,
        tolerance: tol,
    } = *opts;
    let required = (10.0 * x.abs()).max(100.0);
    if !(s_max >= required) {
        return Err(Error::WindowTooSmall {
            given: s_max,
            required,
        });
    }
    if !(e > 0.0 && e < s_max) || !(tol > 0.0) {
        return Err(Error::Precondition(format!(
            "need 0 < excision < window and tolerance > 0 (excision = {e})"
        )));
    }

    let integrand = |s: f64| -> Result<f64> {
        let fp = checked(&f, x + s)?;
        let fm = checked(&f, x - s)?;
        Ok((fm - fp) / s + fp * regularizer(x + s) + fm * regularizer(x - s))
    };
    let near = |r: f64| -> Result<f64> {
        let fp = checked(&f, x + r)?;
        let fm = checked(&f, x - r)?;
        let f0 = checked(&f, x)?;
        let even_r = fp * regularizer(x + r) + fm * regularizer(x - r);
        let even_0 = 2.0 * f0 * regularizer(x);
        Ok((fm - fp) + 0.5 * r * (even_r + even_0))
    };

    let body = integrate_panels(&integrand, &panels(e, s_max), s_max, tol)?;

    let side_mean = |sign: f64| -> Result<f64> {
        let g = |s: f64| checked(&f, x + sign * s);
        let total = integrate_panels(&g, &panels(0.5 * s_max, s_max), s_max, tol)?;
        Ok(total / (0.5 * s_max))
    };
    let c_right = side_mean(1.0)?;
    let c_left = side_mean(-1.0)?;
    let tail = c_right * (s_max / (1.0 + (x + s_max).powi(2)).sqrt()).ln()
        + c_left * ((1.0 + (x - s_max).powi(2)).sqrt() / s_max).ln();

    let coarse = near(e)? + body + tail;
    let fine = near(0.5 * e)? + adaptive_simpson(&integrand, 0.5 * e, e, tol * 1e-3)? + body + tail;
    if (coarse - fine).abs() / PI > 1e-6 {
        log::warn!(
            "hilbert transform at x = {x}: halving the excision changed the value by {:e}",
            (coarse - fine).abs() / PI
        );
    }
    Ok(fine / PI)
}

/// Exact regularized Hilbert transform of a continuous piecewise-linear
/// function that is constant outside a finite range.
///
/// With kinks at `t_j` and slope drops `D_j = slope_left - slope_right`,
/// integrating the kernel piece by piece telescopes to
///
/// ```text
/// pi Hf(x) = sum_j D_j [ (t_j - x) ln|x - t_j| - t_j ln(1 + t_j^2)/2 - arctan t_j ].
/// ```
///
/// The `x`-independent part is precomputed.
#[derive(Debug, Clone)]
pub struct PiecewiseLinearHilbert {
    grid: Grid,
    // padded kinks: one extra node on each side carrying the extension value
    kinks: Vec<f64>,
    drops: Vec<f64>,
    constant: f64,
}

impl PiecewiseLinearHilbert {
    /// The interpolant of `f` inside its grid, bridged over one step on each
    /// side to the mean of `f`, and constant beyond.
    pub fn new(f: &SampledFunction) -> Self {
        let grid = f.grid();
        let c = f.mean();
        let mut values = Vec::with_capacity(f.len() + 2);
        values.push(c);
        values.extend_from_slice(f.values());
        values.push(c);
        let kinks: Vec<f64> = (0..values.len())
            .map(|j| grid.t0 + (j as f64 - 1.0) * grid.h)
            .collect();
        let slope = |p: usize| (values[p + 1] - values[p]) / grid.h;
        let last = values.len() - 1;
        let drops: Vec<f64> = (0..values.len())
            .map(|j| {
                let left = if j == 0 { 0.0 } else { slope(j - 1) };
                let right = if j == last { 0.0 } else { slope(j) };
                left - right
            })
            .collect();
        let constant = -kinks
            .iter()
            .zip(&drops)
            .map(|(&t, &d)| d * (0.5 * t * t.ln_1p_sq() + t.atan()))
            .sum::<f64>();
        PiecewiseLinearHilbert {
            grid,
            kinks,
            drops,
            constant,
        }
    }

    /// `Hf(x)` at any real `x`, in `O(n)`.
    pub fn eval(&self, x: f64) -> f64 {
        let s: f64 = self
            .kinks
            .iter()
            .zip(&self.drops)
            .map(|(&t, &d)| {
                let u = t - x;
                if u == 0.0 {
                    0.0
                } else {
                    d * u * u.abs().ln()
                }
            })
            .sum();
        (s + self.constant) / PI
    }

    /// `Hf` at every grid node, by FFT correlation of the slope drops with
    /// `m h ln(|m| h)`.
    pub fn on_grid(&self) -> Vec<f64> {
        let p = self.drops.len();
        let len = (2 * p).next_power_of_two();
        let h = self.grid.h;
        // out[k] = sum_j D_j kappa(j - k) = (D * g)[k], g[i] = kappa(-i)
        let kappa = |m: i64| {
            if m == 0 {
                0.0
            } else {
                let mf = m as f64;
                h * mf * (h * mf.abs()).ln()
            }
        };
        let mut a: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); len];
        for (j, &d) in self.drops.iter().enumerate() {
            a[j] = Complex::new(d, 0.0);
        }
        let mut g: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); len];
        for i in 0..p as i64 {
            g[i as usize] = Complex::new(kappa(-i), 0.0);
            if i > 0 {
                g[len - i as usize] = Complex::new(kappa(i), 0.0);
            }
        }
        let mut planner = FftPlanner::<f64>::new();
        let fwd = planner.plan_fft_forward(len);
        let inv = planner.plan_fft_inverse(len);
        fwd.process(&mut a);
        fwd.process(&mut g);
        for (x, y) in a.iter_mut().zip(&g) {
            *x *= y;
        }
        inv.process(&mut a);
        let scale = 1.0 / len as f64;
        // original node k sits at padded index k + 1
        (1..p - 1)
            .map(|k| (a[k].re * scale + self.constant) / PI)
            .collect()
    }
}

trait LnOnePlusSquare {
    fn ln_1p_sq(self) -> f64;
}

impl LnOnePlusSquare for f64 {
    /// `ln(1 + t^2)` without overflow for large `t`.
    fn ln_1p_sq(self) -> f64 {
        let a = self.abs();
        if a > 1e150 {
            2.0 * a.ln()
        } else {
            (a * a).ln_1p()
        }
    }
}

/// Hilbert transform of sampled data at every node.
///
/// The samples are read as their linear interpolant inside the grid and as
/// the constant equal to their mean outside it (joined by a one-step linear
/// bridge at each end). Constants therefore map to zero, and the map is
/// linear in the samples. The grid must cover `[-100, 100]`.
pub fn hilbert_transform_sampled(f: &SampledFunction) -> Result<SampledFunction> {
    if f.t0() > -100.0 || f.end() < 100.0 {
        return Err(Error::Precondition(format!(
            "grid [{}, {}] must cover [-100, 100]",
            f.t0(),
            f.end()
        )));
    }
    let values = PiecewiseLinearHilbert::new(f).on_grid();
    SampledFunction::new(f.t0(), f.h(), values)
}
