use super::{growth_constant, phi_sum};
use crate::error::{Error, Result};
use crate::zero_model::ZeroSet;

/// A unit window `[a, a + 1]` over which `Phi` grows by at least `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthWindow {
    pub a: f64,
    /// Multiplicity-weighted number of zeros with real part in `[a, a + 1]`.
    pub count: u64,
    /// Numerically evaluated `Phi(a + 1) - Phi(a)`.
    pub increment: f64,
}

/// Finds the first unit window holding at least `M / c` zeros, where `c` is
/// the growth constant of the set's strip, and confirms numerically that
/// `Phi(a + 1) - Phi(a) >= M` there.
///
/// Windows are scanned left to right with the left edge on a zero. The
/// returned `a` centres the qualifying zeros in `[a, a + 1]`. `None` means
/// no window in the data is dense enough.
pub fn find_growth_window(zs: &ZeroSet, m: f64) -> Result<Option<GrowthWindow>> {
    let (alpha, beta) = match (zs.alpha(), zs.beta()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::EmptyZeroSet),
    };
    if !(m > 0.0) {
        return Err(Error::Precondition(format!("M must be positive, got {m}")));
    }
    let c = growth_constant(alpha, beta)?;
    let needed = m / c;

    let pts = zs.points();
    let mut hi = 0usize;
    let mut count = 0u64;
    for lo in 0..pts.len() {
        if lo > 0 {
            count -= pts[lo - 1].mult as u64;
        }
        // closed window [re_lo, re_lo + 1]
        while hi < pts.len() && pts[hi].re <= pts[lo].re + 1.0 {
            count += pts[hi].mult as u64;
            hi += 1;
        }
        if count as f64 >= needed {
            let first = pts[lo].re;
            let last = pts[hi - 1].re;
            let a = 0.5 * (first + last) - 0.5;
            let increment = phi_sum(zs, a + 1.0, f64::INFINITY)?.value
                - phi_sum(zs, a, f64::INFINITY)?.value;
            if increment < m {
                return Err(Error::GrowthVerification {
                    a,
                    increment,
                    required: m,
                });
            }
            return Ok(Some(GrowthWindow { a, count, increment }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke_arg::phi;
    use crate::zero_model::StripPoint;

    #[test]
    fn hundred_zeros_in_unit_interval() {
        let zs = ZeroSet::from_pairs((0..100).map(|k| (k as f64 / 100.0, 1.0))).unwrap();
        let w = find_growth_window(&zs, 50.0).unwrap().expect("window");
        assert_eq!(w.count, 100);
        assert!((-0.01..=0.0).contains(&w.a), "{}", w.a);
        // oracle: per-zero increments summed directly
        let oracle: f64 = zs
            .points()
            .iter()
            .map(|p| phi(p, w.a + 1.0).value - phi(p, w.a).value)
            .sum();
        assert!((w.increment - oracle).abs() < 1e-9);
        assert!(w.increment >= 50.0);
    }

    #[test]
    fn sparse_progression_has_no_window() {
        let zs = ZeroSet::from_pairs((0..100).map(|n| (n as f64, 1.0))).unwrap();
        assert_eq!(find_growth_window(&zs, 50.0).unwrap(), None);
    }

    #[test]
    fn multiple_zero_window_is_centred() {
        let zs = ZeroSet::new(vec![StripPoint::new(0.0, 1.0, 200).unwrap()]).unwrap();
        let w = find_growth_window(&zs, 50.0).unwrap().unwrap();
        assert_eq!(w.a, -0.5);
        assert_eq!(w.count, 200);
        let oracle = 200.0 * 2.0 * 0.5f64.atan();
        assert!((w.increment - oracle).abs() < 1e-9);
        assert!((oracle - 185.4).abs() < 0.1);
    }

    #[test]
    fn empty_set_is_rejected() {
        assert!(find_growth_window(&ZeroSet::empty(), 1.0).is_err());
    }
}
