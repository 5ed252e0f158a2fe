//! Mean oscillation of ln|x| over a dyadic family, refined once, and the
//! growth-to-oscillation check for a step.

use stripzeros::hilbert_bmo::{bmo_estimate, check_fast2, Grid, SampledFunction};

fn log_abs(h: f64) -> stripzeros::Result<SampledFunction> {
    let grid = Grid::spanning(-100.0, 100.0, h)?;
    // the node at 0 takes the value of its neighbours
    SampledFunction::from_fn(grid, |t| if t.abs() < h / 2.0 { h.ln() } else { t.abs().ln() })
}

fn main() -> stripzeros::Result<()> {
    for h in [0.02, 0.01] {
        let r = bmo_estimate(&log_abs(h)?, 0.04, 128.0)?;
        println!(
            "h = {h}: p_I(ln|x|) = {:.5} on [{:.2}, {:.2}]",
            r.oscillation, r.a, r.b
        );
    }

    let m = 6.0;
    let grid = Grid::spanning(-3.0, 4.0, 0.01)?;
    let step = SampledFunction::from_fn(grid, |t| if t < 0.5 { 0.0 } else { m })?;
    let v = check_fast2(&step, 0.0, m)?;
    println!(
        "step of height {m}: p_I = {:.4} against M/6 = {:.4}, pass = {}",
        v.oscillation, v.bound, v.pass
    );
    Ok(())
}
