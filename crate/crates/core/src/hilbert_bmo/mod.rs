//! Regularized Hilbert transform, mean oscillation and BMO lower bounds.
//!
//! The transform used throughout is
//!
//! ```text
//! Hf(x) = (1/pi) p.v. int f(t) { 1/(x - t) + t/(t^2 + 1) } dt
//! ```
//!
//! which is defined for every bounded `f` and kills constants. On top of it
//! sit the mean oscillation `p_I(f)`, a dyadic-family lower bound for the
//! BMO norm, the growth-to-oscillation check for monotone functions, the
//! argument-sum model of `H[log|F|]`, and the divergence scan that ties
//! them together.

mod hilbert;
mod model;
mod oscillation;
mod sampled;
mod theorem;

pub use hilbert::{
    hilbert_transform, hilbert_transform_sampled, hilbert_transform_with, HilbertOptions,
    PiecewiseLinearHilbert,
};
pub use model::{
    compose_helson_szego, hlf_evaluate, hlf_framed, reconstruct_log_modulus, HelsonSzego,
    HilbertLogModel, HlfValue, HsWitness,
};
pub use oscillation::{bmo_estimate, check_fast2, mean_oscillation, Fast2Verdict, OscillationReport};
pub use sampled::{load_sampled_csv, write_sampled_csv, Grid, SampledFunction};
pub use theorem::{theorem_divergence_scan, Probe, ScanConfig, ScanRow};
