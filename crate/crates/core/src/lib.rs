//! Numerical toolkit for zero sequences of exponential-type entire functions
//! lying in a horizontal strip of the upper half-plane.
//!
//! * [`zero_model`]: strip zero sets, window counts, uniform density,
//!   separation, Blaschke sums and the Cartwright integral.
//! * [`blaschke_arg`]: continuous argument branches of Blaschke factors and
//!   their sums along the real line.
//! * [`hilbert_bmo`]: regularized Hilbert transform, mean oscillation and BMO
//!   lower bounds, and the divergence scan built on them.
//! * [`function_zoo`]: sine-type controls and the infinite-density
//!   counterexamples.
//! * [`cli`]: the `stripzeros` command line.

pub mod blaschke_arg;
pub mod cli;
pub mod error;
pub mod function_zoo;
pub mod hilbert_bmo;
pub mod zero_model;

pub use error::{Error, Result};

/// Formats a float with 17 significant digits, enough for a bit-exact
/// round trip through text.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
