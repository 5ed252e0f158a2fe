//! Test functions with known zeros: a sine-type control, a cluster of
//! repeated zeros, and two Cartwright-class functions whose zeros have
//! infinite upper density.
//!
//! Every model carries its zeros, a closed-form evaluator for `log|F(x)|`,
//! the vertical shift applied to the zeros and a list of probes where the
//! zeros are concentrated. The counterexamples have real zeros as generated;
//! [`shift_to_strip`] moves them into the upper half-plane.

mod referee;

use std::f64::consts::PI;
use std::io::Write;

use crate::blaschke_arg::AnchoredPoint;
use crate::error::{Error, Result};
use crate::fmt17;
use crate::hilbert_bmo::{HilbertLogModel, Probe};
use crate::zero_model::{StripPoint, ZeroSet, DELTA_HEADER};

pub use referee::{count_claim_check, referee_example1, referee_example2, CountCheck, DeltaPoint};

/// One factor `cos(freq z)^power` of a cosine product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosFactor {
    pub freq: f64,
    pub power: u32,
}

/// Closed form for `log|F(x)|` of the unshifted function; the model's shift
/// `s` is applied as `F(x - i s)`.
#[derive(Debug, Clone, PartialEq)]
pub enum LogModulus {
    /// `F(z) = sin(pi z)`.
    Sine,
    /// `F(z) = prod cos(freq z)^power`.
    CosProduct(Vec<CosFactor>),
    /// `F(z) = prod (z - r)^mult` over real roots `r`.
    Polynomial(Vec<(f64, u32)>),
}

// cos(b) at or below this is treated as a zero of an unshifted factor
const SINGULAR_GUARD: f64 = 1e-12;

impl LogModulus {
    pub fn eval(&self, x: f64, shift: f64) -> Result<f64> {
        match self {
            LogModulus::Sine => {
                let (s, c) = (PI * x).sin_cos();
                let (sh, ch) = ((PI * shift).sinh(), (PI * shift).cosh());
                let m2 = s * s * ch * ch + c * c * sh * sh;
                if m2 == 0.0 {
                    return Err(Error::Singular(format!("sine factor vanishes at x = {x}")));
                }
                Ok(0.5 * m2.ln())
            }
            LogModulus::CosProduct(factors) => {
                let terms = factors
                    .iter()
                    .map(|f| {
                        let c = (f.freq * x).cos();
                        let v = if shift == 0.0 {
                            if c.abs() < SINGULAR_GUARD {
                                return Err(Error::Singular(format!(
                                    "factor cos({} z)^{} vanishes at x = {x}",
                                    f.freq, f.power
                                )));
                            }
                            c.abs().ln()
                        } else {
                            // |cos(a - ib)|^2 = cos^2 a + sinh^2 b
                            let sh = (f.freq * shift).sinh();
                            0.5 * (c * c + sh * sh).ln()
                        };
                        Ok(f.power as f64 * v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(crate::blaschke_arg::pairwise_sum(&terms))
            }
            LogModulus::Polynomial(roots) => {
                let mut sum = 0.0;
                for &(r, m) in roots {
                    let d2 = (x - r) * (x - r) + shift * shift;
                    if d2 == 0.0 {
                        return Err(Error::Singular(format!("root of multiplicity {m} at x = {x}")));
                    }
                    sum += 0.5 * m as f64 * d2.ln();
                }
                Ok(sum)
            }
        }
    }
}

/// A generated function: zeros, log-modulus and where to look.
#[derive(Debug, Clone)]
pub struct ZooModel {
    pub name: String,
    /// Truncation parameter (number of factors, `k_max`, multiplicity or
    /// the range of integer zeros, depending on the model).
    pub truncation: u64,
    /// Vertical shift of the zeros; `0` for models with real zeros.
    pub shift: f64,
    /// Width `T` of the indicator diagram used by the model of `H[log|F|]`.
    pub width: f64,
    pub probes: Vec<Probe>,
    points: Vec<AnchoredPoint>,
    delta_points: Option<Vec<DeltaPoint>>,
    log_modulus: LogModulus,
}

impl ZooModel {
    /// Zeros in anchored form, with `Im` equal to the current shift.
    pub fn points(&self) -> &[AnchoredPoint] {
        &self.points
    }

    /// Offset-form description of the zeros, for models that have one.
    pub fn delta_points(&self) -> Option<&[DeltaPoint]> {
        self.delta_points.as_deref()
    }

    pub fn log_modulus_form(&self) -> &LogModulus {
        &self.log_modulus
    }

    /// `log|F(x)|` of the (shifted) truncated function.
    pub fn log_modulus(&self, x: f64) -> Result<f64> {
        self.log_modulus.eval(x, self.shift)
    }

    pub fn with_width(mut self, width: f64) -> Result<Self> {
        if !(width >= 0.0) || !width.is_finite() {
            return Err(Error::Input(format!("width must be finite and >= 0, got {width}")));
        }
        self.width = width;
        Ok(self)
    }

    fn require_shifted(&self) -> Result<()> {
        if self.shift > 0.0 {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "model {} has real zeros; shift it into the strip first",
                self.name
            )))
        }
    }

    /// The zeros as a [`ZeroSet`]. Absolute positions are rounded to `f64`.
    pub fn zero_set(&self) -> Result<ZeroSet> {
        self.require_shifted()?;
        ZeroSet::new(
            self.points
                .iter()
                .map(|p| StripPoint::new(p.re(), p.im, p.mult))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The argument-sum model of `H[log|F|]` for these zeros.
    ///
    /// For the truncated sine-type model the zeros beyond `|n| > N` are
    /// missing; near the origin each of them would add `phi_z(t) ~ t y/|z|^2`,
    /// so the width is reduced by twice their total to keep the linear
    /// drift of the truncation out of the model.
    pub fn hlf_model(&self, theta: f64) -> Result<HilbertLogModel> {
        self.require_shifted()?;
        let width = match self.log_modulus {
            LogModulus::Sine => self.width - 2.0 * sine_omitted_slope(self.shift, self.truncation),
            _ => self.width,
        };
        HilbertLogModel::from_anchored(width, theta, self.points.clone())
    }
}

/// `sum_{|n| > N} y/(n^2 + y^2)`, using
/// `sum_{n >= 1} y/(n^2 + y^2) = (pi y coth(pi y) - 1) / (2y)`.
pub fn sine_omitted_slope(y: f64, n: u64) -> f64 {
    let full = (PI * y / (PI * y).tanh() - 1.0) / (2.0 * y);
    let head: f64 = (1..=n).map(|k| y / ((k * k) as f64 + y * y)).sum();
    2.0 * (full - head).max(0.0)
}

/// `F(z) = sin(pi (z - i h))` truncated to the zeros `n + i h`, `|n| <= n_max`,
/// with `T = 2 pi`.
pub fn sine_type_model(h: f64, n_max: u64) -> Result<ZooModel> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Input(format!("shift h must be positive, got {h}")));
    }
    let n = n_max as i64;
    let points = (-n..=n)
        .map(|k| AnchoredPoint {
            anchor: k as f64,
            offset: 0.0,
            im: h,
            mult: 1,
        })
        .collect();
    Ok(ZooModel {
        name: "sine".into(),
        truncation: n_max,
        shift: h,
        width: 2.0 * PI,
        probes: vec![Probe::at(0.0), Probe::at(0.5)],
        points,
        delta_points: None,
        log_modulus: LogModulus::Sine,
    })
}

/// `F(z) = (z - a - 1/2)^K`: one real zero of multiplicity `K` in the middle
/// of `[a, a + 1]`.
pub fn cluster_model(k: u32, a: f64) -> Result<ZooModel> {
    if k == 0 || !a.is_finite() {
        return Err(Error::Input(format!("cluster needs K >= 1 and finite a (got {k}, {a})")));
    }
    let x = a + 0.5;
    Ok(ZooModel {
        name: "cluster".into(),
        truncation: k as u64,
        shift: 0.0,
        width: 0.0,
        probes: vec![Probe::at(x)],
        points: vec![AnchoredPoint {
            anchor: 0.0,
            offset: x,
            im: 0.0,
            mult: k,
        }],
        delta_points: None,
        log_modulus: LogModulus::Polynomial(vec![(x, k)]),
    })
}

/// Moves every zero up by `h`; the log-modulus becomes that of `F(z - ih)`.
pub fn shift_to_strip(model: &ZooModel, h: f64) -> Result<ZooModel> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Input(format!("shift h must be positive, got {h}")));
    }
    let mut out = model.clone();
    out.shift += h;
    for p in &mut out.points {
        p.im += h;
    }
    Ok(out)
}

/// Model names accepted by [`model_by_name`].
pub const MODEL_NAMES: [&str; 4] = ["sine", "cluster", "example1", "example2"];

/// Builds a named model with truncation parameter `k` (unshifted for the
/// models with real zeros).
pub fn model_by_name(name: &str, k: u64) -> Result<ZooModel> {
    match name {
        "sine" => sine_type_model(1.0, k),
        "cluster" => cluster_model(
            u32::try_from(k).map_err(|_| Error::Input(format!("multiplicity {k} too large")))?,
            0.0,
        ),
        "example1" => referee_example1(k, 1e4),
        "example2" => referee_example2(k),
        _ => Err(Error::Input(format!(
            "unknown model {name:?} (expected one of {})",
            MODEL_NAMES.join(", ")
        ))),
    }
}

/// Writes the zeros in the zero-set CSV format. Models with an offset form
/// use the `re_base,delta_log3,im,mult` layout so that positions near huge
/// bases survive the round trip.
pub fn write_zoo_csv<W: Write>(model: &ZooModel, mut out: W) -> Result<()> {
    model.require_shifted()?;
    match &model.delta_points {
        Some(deltas) => {
            writeln!(out, "{DELTA_HEADER}")?;
            for d in deltas {
                writeln!(
                    out,
                    "{},{},{},1",
                    fmt17(d.base()),
                    fmt17(d.delta_log3),
                    fmt17(model.shift)
                )?;
            }
        }
        None => {
            writeln!(out, "re,im,mult")?;
            for p in &model.points {
                writeln!(out, "{},{},{}", fmt17(p.re()), fmt17(p.im), p.mult)?;
            }
        }
    }
    Ok(())
}
