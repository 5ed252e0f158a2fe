use super::{upper_density_profile, StripPoint, ZeroSet};
use crate::error::{Error, Result};

/// Minimum pairwise distance between zeros, counted with multiplicity, so a
/// multiple point gives 0.
pub fn separation_constant(zs: &ZeroSet) -> Result<f64> {
    if zs.total_multiplicity() < 2 {
        return Err(Error::Precondition(
            "separation needs at least two points counted with multiplicity".into(),
        ));
    }
    if zs.points().iter().any(|p| p.mult > 1) {
        return Ok(0.0);
    }
    let pts = zs.points();
    let mut best = f64::INFINITY;
    // sorted by re: once the real gap alone exceeds the best distance, stop
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if q.re - p.re >= best {
                break;
            }
            best = best.min(p.distance(q));
        }
    }
    Ok(best)
}

/// Partition of a zero set into uniformly discrete classes.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub classes: Vec<ZeroSet>,
    /// Largest multiplicity-weighted count over windows of length `2 delta`.
    pub window_bound: u64,
}

/// Greedy first-fit split into classes whose points are pairwise at least
/// `delta` apart.
///
/// Points are expanded by multiplicity and visited in order of real part;
/// each goes into the first class with no member closer than `delta`.
pub fn decompose_uniformly_discrete(zs: &ZeroSet, delta: f64) -> Result<Decomposition> {
    if zs.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Precondition(format!(
            "delta must be positive, got {delta}"
        )));
    }
    let mut classes: Vec<Vec<StripPoint>> = Vec::new();
    for p in zs.expanded() {
        let slot = classes.iter().position(|class| {
            class
                .iter()
                .rev()
                .take_while(|q| p.re - q.re < delta)
                .all(|q| p.distance(q) >= delta)
        });
        match slot {
            Some(k) => classes[k].push(p),
            None => classes.push(vec![p]),
        }
    }
    let window_bound = upper_density_profile(zs, &[2.0 * delta])?.entries[0].count;
    Ok(Decomposition {
        classes: classes
            .into_iter()
            .map(ZeroSet::new)
            .collect::<Result<_>>()?,
        window_bound,
    })
}
