use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::{CosFactor, LogModulus, ZooModel};
use crate::blaschke_arg::AnchoredPoint;
use crate::error::{Error, Result};
use crate::hilbert_bmo::Probe;

const LN_3: f64 = 1.098_612_288_668_109_8;

/// `f(z) = prod_{n <= K} cos(z / n^3)^n`, with the zeros `n^3 pi (m + 1/2)`
/// of every factor inside `|x| <= window`. Coinciding zeros of different
/// factors are merged and their multiplicities added.
pub fn referee_example1(k: u64, window: f64) -> Result<ZooModel> {
    if k == 0 || !(window > 0.0) || !window.is_finite() {
        return Err(Error::Input(format!(
            "example 1 needs K >= 1 and a positive window (got K = {k}, window = {window})"
        )));
    }
    // zero of factor n at (pi/2) q with q = n^3 (2m + 1)
    let q_max = (window / FRAC_PI_2).floor() as i64;
    let mut zeros: BTreeMap<i64, u32> = BTreeMap::new();
    for n in 1..=k as i64 {
        let cube = n * n * n;
        if cube > q_max {
            break;
        }
        let mut odd = 1;
        while cube * odd <= q_max {
            *zeros.entry(cube * odd).or_default() += n as u32;
            *zeros.entry(-cube * odd).or_default() += n as u32;
            odd += 2;
        }
    }
    let points = zeros
        .into_iter()
        .map(|(q, mult)| AnchoredPoint {
            anchor: 0.0,
            offset: q as f64 * FRAC_PI_2,
            im: 0.0,
            mult,
        })
        .collect();
    let factors = (1..=k)
        .map(|n| CosFactor {
            freq: 1.0 / (n * n * n) as f64,
            power: n as u32,
        })
        .collect();
    let probes = (1..=k)
        .map(|n| ((n * n * n) as f64) * FRAC_PI_2)
        .take_while(|&x| x <= window)
        .map(Probe::at)
        .collect();
    Ok(ZooModel {
        name: "example1".into(),
        truncation: k,
        shift: 0.0,
        width: 0.0,
        probes,
        points,
        delta_points: None,
        log_modulus: LogModulus::CosProduct(factors),
    })
}

/// The zero `z_kn = 3^k - delta_kn` of the second example, with
/// `delta_kn = 3^k / (3^(n^2 - n) + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaPoint {
    pub k: u32,
    pub n: u32,
    /// `log_3 delta_kn`.
    pub delta_log3: f64,
}

impl DeltaPoint {
    pub fn new(k: u32, n: u32) -> Self {
        let m = (n as f64) * (n as f64) - n as f64;
        let delta_log3 = k as f64 - m - (-m * LN_3).exp().ln_1p() / LN_3;
        DeltaPoint { k, n, delta_log3 }
    }

    /// `3^k`, exact for `k <= 33`.
    pub fn base(&self) -> f64 {
        3f64.powi(self.k as i32)
    }

    pub fn delta(&self) -> f64 {
        (self.delta_log3 * LN_3).exp()
    }

    /// Whether `0 < delta < 1`, i.e. the zero lies in `(3^k - 1, 3^k)`.
    /// Since `3^k < 3^m + 1` exactly when `k <= m`, this reduces to
    /// `k <= n^2 - n`.
    pub fn in_unit_interval(&self) -> bool {
        (self.k as u64) <= (self.n as u64) * (self.n as u64) - self.n as u64
    }
}

/// Largest `k` for which `3^k` is an exact `f64`.
pub const MAX_EXACT_POWER: u64 = 33;

/// The zeros `z_kn`, `1 <= n < k <= k_max`, of
/// `f(z) = prod_n cos((pi/2)(3^-n + 3^-n^2) z)`, stored relative to the
/// anchors `3^k`. The log-modulus uses the factors `n < k_max`.
pub fn referee_example2(k_max: u64) -> Result<ZooModel> {
    if k_max < 2 {
        return Err(Error::Input(format!("example 2 needs k_max >= 2, got {k_max}")));
    }
    if k_max > MAX_EXACT_POWER {
        return Err(Error::Precision(format!(
            "k_max = {k_max} puts anchors beyond 3^{MAX_EXACT_POWER}, which is not exact in f64"
        )));
    }
    let deltas: Vec<DeltaPoint> = (2..=k_max as u32)
        .flat_map(|k| (1..k).map(move |n| DeltaPoint::new(k, n)))
        .collect();
    let points = deltas
        .iter()
        .map(|d| AnchoredPoint {
            anchor: d.base(),
            offset: -d.delta(),
            im: 0.0,
            mult: 1,
        })
        .collect();
    let factors = (1..k_max as i32)
        .map(|n| CosFactor {
            freq: FRAC_PI_2 * (3f64.powi(-n) + 3f64.powi(-n * n)),
            power: 1,
        })
        .collect();
    let probes = (2..=k_max as i32)
        .map(|k| Probe {
            origin: 3f64.powi(k),
            center: 0.0,
        })
        .collect();
    Ok(ZooModel {
        name: "example2".into(),
        truncation: k_max,
        shift: 0.0,
        width: 0.0,
        probes,
        points,
        delta_points: Some(deltas),
        log_modulus: LogModulus::CosProduct(factors),
    })
}

/// Result of counting the zeros of the second example in `(3^k - 1, 3^k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountCheck {
    pub k: u64,
    pub count: u64,
    /// `count >= k/2`.
    pub pass: bool,
    /// Pairs `(n, n')` whose offsets agree to relative `1e-12`.
    pub duplicates: Vec<(u32, u32)>,
}

pub fn count_claim_check(model: &ZooModel, k: u64) -> Result<CountCheck> {
    let deltas = model.delta_points().ok_or_else(|| {
        Error::Input(format!("model {} has no offset-form zeros", model.name))
    })?;
    if !(2..=model.truncation).contains(&k) {
        return Err(Error::Precondition(format!(
            "k = {k} outside the generated range 2..={}",
            model.truncation
        )));
    }
    let inside: Vec<&DeltaPoint> = deltas
        .iter()
        .filter(|d| d.k as u64 == k && d.in_unit_interval())
        .collect();
    // relative difference 1 - 3^-|d| of the offsets
    let limit = -(-1e-12f64).ln_1p() / LN_3;
    let mut duplicates = Vec::new();
    for (i, a) in inside.iter().enumerate() {
        for b in &inside[i + 1..] {
            if (a.delta_log3 - b.delta_log3).abs() <= limit {
                duplicates.push((a.n, b.n));
            }
        }
    }
    let count = inside.len() as u64;
    Ok(CountCheck {
        k,
        count,
        pass: 2 * count >= k,
        duplicates,
    })
}
