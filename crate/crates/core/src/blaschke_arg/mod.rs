//! Continuous argument branches of Blaschke factors along the real line.
//!
//! For `z = x + iy` with `y > 0` let
//!
//! ```text
//! psi_z(t) = arctan( y t / (|z|^2 - x t) )
//! ```
//!
//! (principal branch). `psi_z` jumps by `pi` where the denominator
//! vanishes, at `t = |z|^2 / x`. The branch `phi_z` adds `+pi` above that
//! point when `x > 0` and `-pi` below it when `x < 0`, and takes the value
//! `+-pi/2` at the point itself, which makes it continuous and strictly
//! increasing with `phi_z(0) = 0`. For `x = 0` there is no jump and
//! `phi_z = psi_z`.

mod growth;
mod sum;

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::zero_model::StripPoint;

pub use growth::{find_growth_window, GrowthWindow};
pub use sum::{pairwise_sum, phi_sum, phi_sum_framed, AnchoredPoint, PhiSumResult};

/// Position of `t` relative to the jump point `|z|^2 / x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchRegion {
    /// `t < |z|^2 / x`; also used for `x = 0`, where there is no jump point.
    Below,
    At,
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgBranchValue {
    pub value: f64,
    pub region: BranchRegion,
}

/// `arctan(y t / (|z|^2 - x t))` on the principal branch. At the pole of the
/// argument this is the one-sided limit `+-pi/2` given by the sign of `y t`.
pub fn psi(z: &StripPoint, t: f64) -> f64 {
    (z.im * t / (z.norm_sqr() - z.re * t)).atan()
}

/// Sign-consistent `psi`: `den_positive` fixes which side of the pole the
/// argument is on, so a denominator that rounds to the wrong sign next to the
/// pole cannot flip the result by `pi`.
fn psi_on_side(num: f64, den: f64, den_positive: bool) -> f64 {
    let d = if den_positive { den.abs() } else { -den.abs() };
    if d == 0.0 {
        // approach from the declared side
        let s = if den_positive { 1.0 } else { -1.0 };
        return s * num.signum() * FRAC_PI_2;
    }
    (num / d).atan()
}

fn assemble(x: f64, psi_value: f64, region: BranchRegion) -> f64 {
    match (x > 0.0, x < 0.0, region) {
        (true, _, BranchRegion::Above) => psi_value + PI,
        (true, _, BranchRegion::At) => FRAC_PI_2,
        (_, true, BranchRegion::Below) => psi_value - PI,
        (_, true, BranchRegion::At) => -FRAC_PI_2,
        _ => psi_value,
    }
}

/// The continuous branch `phi_z(t)`.
///
/// The jump point is located by comparing `t` with `|z|^2 / x` in floating
/// point, so passing exactly that quotient returns the branch constant.
pub fn phi(z: &StripPoint, t: f64) -> ArgBranchValue {
    let (x, y) = (z.re, z.im);
    let num = y * t;
    let den = z.norm_sqr() - x * t;
    if x == 0.0 {
        return ArgBranchValue {
            value: psi_on_side(num, den, true),
            region: BranchRegion::Below,
        };
    }
    let jump = z.norm_sqr() / x;
    let region = if t < jump {
        BranchRegion::Below
    } else if t > jump {
        BranchRegion::Above
    } else {
        BranchRegion::At
    };
    // x > 0: den > 0 below the jump; x < 0: den > 0 above it
    let den_positive = match region {
        BranchRegion::Below => x > 0.0,
        BranchRegion::Above => x < 0.0,
        BranchRegion::At => true,
    };
    let value = match region {
        BranchRegion::At => assemble(x, 0.0, region),
        _ => assemble(x, psi_on_side(num, den, den_positive), region),
    };
    ArgBranchValue { value, region }
}

/// `phi_z(x + u)` from the offset `u = t - x`, for zeros far from the origin
/// whose absolute position carries less precision than the offset.
///
/// The jump side is read off the sign of `|z|^2 - x t = y^2 - x u`.
pub fn phi_offset(x: f64, y: f64, u: f64) -> f64 {
    let num = y * (x + u);
    let den = y * y - x * u;
    if x == 0.0 {
        return psi_on_side(num, den, true);
    }
    let region = if den == 0.0 {
        BranchRegion::At
    } else if (den > 0.0) == (x > 0.0) {
        BranchRegion::Below
    } else {
        BranchRegion::Above
    };
    let psi_value = if den == 0.0 { 0.0 } else { (num / den).atan() };
    assemble(x, psi_value, region)
}

/// `d phi_z / dt = y (x^2 + y^2) / ((x^2 + y^2 - x t)^2 + y^2 t^2)`, which
/// is positive for every real `t`.
pub fn phi_derivative(z: &StripPoint, t: f64) -> f64 {
    let (x, y) = (z.re, z.im);
    let n2 = z.norm_sqr();
    let d = n2 - x * t;
    y * n2 / (d * d + y * y * t * t)
}

/// Lower bound `min{a/(a^2+1), b/(b^2+1)}` of `phi_z'` on `[x-1, x+1]` for
/// zeros with `a <= Im z <= b`.
pub fn growth_constant(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 0.0) || !(beta >= alpha) || !beta.is_finite() {
        return Err(Error::Precondition(format!(
            "growth constant needs 0 < alpha <= beta, got alpha = {alpha}, beta = {beta}"
        )));
    }
    Ok((alpha / (alpha * alpha + 1.0)).min(beta / (beta * beta + 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(x: f64, y: f64) -> StripPoint {
        StripPoint::new(x, y, 1).unwrap()
    }

    /// Independent closed form: `phi_z(t) = arctan((t - x)/y) + arctan(x/y)`.
    fn phi_closed_form(x: f64, y: f64, t: f64) -> f64 {
        ((t - x) / y).atan() + (x / y).atan()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&z(3.0, 2.0), 0.0), 0.0);
        assert!((psi(&z(3.0, 2.0), 3.0) - 1.5f64.atan()).abs() < 1e-15);
        assert!((psi(&z(3.0, 2.0), 3.0) - 0.98279).abs() < 1e-5);
        assert!((psi(&z(0.0, 1.0), 1.0) - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn phi_branch_constants() {
        let at = phi(&z(3.0, 2.0), 13.0 / 3.0);
        assert_eq!(at.value, FRAC_PI_2);
        assert_eq!(at.region, BranchRegion::At);

        let at = phi(&z(-1.0, 1.0), -2.0);
        assert_eq!(at.value, -FRAC_PI_2);
        assert_eq!(at.region, BranchRegion::At);

        assert_eq!(phi(&z(3.0, 2.0), 0.0).value, 0.0);
    }

    #[test]
    fn phi_above_branch_point() {
        let v = phi(&z(3.0, 2.0), 10.0);
        assert_eq!(v.region, BranchRegion::Above);
        let expected = PI - (20.0f64 / 17.0).atan();
        assert!((v.value - expected).abs() < 1e-14);
        assert!((v.value - 2.27529).abs() < 1e-5);
        // continuity sweep from t = 0 lands on the same value
        let mut acc = 0.0;
        let n = 100_000;
        for k in 0..n {
            let t = 10.0 * (k as f64 + 0.5) / n as f64;
            acc += phi_derivative(&z(3.0, 2.0), t) * 10.0 / n as f64;
        }
        assert!((acc - v.value).abs() < 1e-8);
    }

    #[test]
    fn derivative_examples() {
        assert!((phi_derivative(&z(3.0, 2.0), 3.0) - 0.5).abs() < 1e-15);
        assert_eq!(phi_derivative(&z(0.0, 1.0), 0.0), 1.0);
        for (x, y) in [(2.0, 0.5), (-4.0, 3.0), (10.0, 1.0)] {
            let d = phi_derivative(&z(x, y), x + 1.0);
            assert!((d - y / (y * y + 1.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn growth_constant_examples() {
        assert_eq!(growth_constant(1.0, 1.0).unwrap(), 0.5);
        assert!((growth_constant(1.0, 2.0).unwrap() - 0.4).abs() < 1e-15);
        assert!((growth_constant(0.5, 3.0).unwrap() - 0.3).abs() < 1e-15);
        assert!(growth_constant(0.0, 1.0).is_err());
        assert!(growth_constant(2.0, 1.0).is_err());
    }

    #[test]
    fn x_zero_is_plain_arctan() {
        for t in [-5.0, -0.5, 0.0, 1.0, 7.0] {
            let v = phi(&z(0.0, 2.0), t).value;
            assert!((v - (2.0 * t / 4.0f64).atan()).abs() < 1e-15);
        }
    }

    #[test]
    fn full_winding_is_pi() {
        for (x, y) in [(3.0, 2.0), (-1.0, 1.0), (0.2, 4.0), (-50.0, 0.5)] {
            let d = phi(&z(x, y), 1e8).value - phi(&z(x, y), -1e8).value;
            assert!((d - PI).abs() < 1e-6, "{x} {y} {d}");
        }
    }

    proptest! {
        #[test]
        fn matches_closed_form(x in -50.0f64..50.0, y in 0.05f64..5.0, t in -200.0f64..200.0) {
            let v = phi(&z(x, y), t).value;
            prop_assert!((v - phi_closed_form(x, y, t)).abs() < 1e-9);
            let w = phi_offset(x, y, t - x);
            prop_assert!((w - phi_closed_form(x, y, t)).abs() < 1e-9);
        }

        #[test]
        fn continuous_at_branch_point(x in prop_oneof![-20.0f64..-0.1, 0.1f64..20.0], y in 0.1f64..5.0) {
            let p = z(x, y);
            let jump = p.norm_sqr() / x;
            let target = if x > 0.0 { FRAC_PI_2 } else { -FRAC_PI_2 };
            // slope at the jump point is y/(y^2 + (jump - x)^2) <= 1/y
            let tol = 1e-6 / y + 1e-9;
            prop_assert!((phi(&p, jump - 1e-6).value - target).abs() <= tol);
            prop_assert!((phi(&p, jump + 1e-6).value - target).abs() <= tol);
        }

        #[test]
        fn strictly_increasing(x in -20.0f64..20.0, y in 0.1f64..5.0, t in -100.0f64..100.0, dt in 1e-3f64..10.0) {
            let p = z(x, y);
            prop_assert!(phi(&p, t + dt).value > phi(&p, t).value);
        }

        #[test]
        fn derivative_matches_central_difference(
            x in -20.0f64..20.0, y in 0.2f64..5.0, offset in -10.0f64..10.0
        ) {
            let p = z(x, y);
            let t = x + offset;
            if x != 0.0 {
                prop_assume!((t - p.norm_sqr() / x).abs() >= 1e-3);
            }
            let h = 1e-5;
            let fd = (phi(&p, t + h).value - phi(&p, t - h).value) / (2.0 * h);
            let d = phi_derivative(&p, t);
            prop_assert!(((fd - d) / d).abs() <= 1e-6, "fd {fd} d {d}");
        }

        #[test]
        fn unit_window_increment_bound(
            alpha in 0.05f64..4.0, span in 0.0f64..0.99, a in -1e3f64..1e3,
            s in 0.0f64..1.0, w in 0.0f64..1.0,
        ) {
            let beta = alpha + span * (5.0 - alpha);
            let y = alpha + w * (beta - alpha);
            let x = a + s;
            let c = growth_constant(alpha, beta).unwrap();
            let p = z(x, y);
            prop_assert!(phi(&p, a + 1.0).value - phi(&p, a).value >= c - 1e-9);
        }
    }
}
