//! The regularized Hilbert transform checked against closed forms, at a
//! point and on a sampled grid.

use std::f64::consts::{LN_2, PI};

use stripzeros::hilbert_bmo::{
    hilbert_transform, hilbert_transform_sampled, Grid, SampledFunction,
};

fn main() -> stripzeros::Result<()> {
    let one = hilbert_transform(|_| 1.0, 2.0, 1e4, 1e-4)?;
    println!("H[1](2) = {one:.3e}");

    let ind = |t: f64| if (-1.0..=1.0).contains(&t) { 1.0 } else { 0.0 };
    let v = hilbert_transform(ind, 3.0, 1e4, 1e-4)?;
    println!("H[1_[-1,1]](3) = {v:.8}, ln2/pi = {:.8}", LN_2 / PI);

    println!("H[cos](x) against sin(x):");
    for x in [-10.0, -2.5, 0.0, 1.0, 7.5] {
        let h = hilbert_transform(f64::cos, x, 1e4, 1e-4)?;
        println!("  x = {x:>5}: {h:+.9}  {:+.9}", x.sin());
    }

    let grid = Grid::spanning(-200.0, 200.0, 0.01)?;
    let hs = hilbert_transform_sampled(&SampledFunction::from_fn(grid, f64::cos)?)?;
    let worst = (0..hs.len())
        .filter(|&k| hs.t(k).abs() <= 10.0)
        .map(|k| (hs.values()[k] - hs.t(k).sin()).abs())
        .fold(0.0, f64::max);
    println!("sampled route on [-200, 200], h = 0.01: max error on [-10, 10] = {worst:.2e}");
    Ok(())
}
