//! Weights exp(u + Hv) and the bound sup|v| < pi/2 that admits them.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use stripzeros::hilbert_bmo::{compose_helson_szego, Grid, HsWitness, SampledFunction};

fn main() -> stripzeros::Result<()> {
    let grid = Grid::spanning(-200.0, 200.0, 0.01)?;
    let u = SampledFunction::constant(grid, 0.0)?;
    let v = SampledFunction::from_fn(grid, |t| {
        if (t.abs() - 1.0).abs() < 1e-9 {
            0.5
        } else if t.abs() < 1.0 {
            1.0
        } else {
            0.0
        }
    })?;
    let hs = compose_helson_szego(&HsWitness::new(u.clone(), v)?)?;
    println!("log w(3) = {:.8}, ln2/pi = {:.8}", hs.log_weight.eval(3.0), LN_2 / PI);
    println!("w(0) = {:.6}, w(3) = {:.6}", hs.weight.eval(0.0), hs.weight.eval(3.0));

    for level in [FRAC_PI_2 - 1e-9, FRAC_PI_2] {
        let v = SampledFunction::constant(grid, level)?;
        match compose_helson_szego(&HsWitness::new(u.clone(), v)?) {
            Ok(_) => println!("sup|v| = {level:.12}: accepted"),
            Err(e) => println!("sup|v| = {level:.12}: {e}"),
        }
    }
    Ok(())
}
