//! Window counts and upper density for a few zero sets, plus the greedy
//! split of a set into separated classes.

use stripzeros::zero_model::{
    decompose_uniformly_discrete, parse_zero_set, separation_constant, upper_density_profile,
    ZeroSet,
};

fn main() -> stripzeros::Result<()> {
    let radii = [1.0, 10.0, 100.0];

    for d in [1.0, 2.0, 5.0] {
        let zs = ZeroSet::from_pairs((0..1000).map(|n| (d * n as f64, 1.0)))?;
        let profile = upper_density_profile(&zs, &radii)?;
        println!("spacing {d}: densities {:?}", profile.densities());
    }

    // a progression with a dense lump of 40 zeros near 500
    let mut pairs: Vec<(f64, f64)> = (0..1000).map(|n| (n as f64, 1.0)).collect();
    pairs.extend((0..40).map(|j| (500.0 + j as f64 / 40.0, 2.0)));
    let zs = ZeroSet::from_pairs(pairs)?;
    for e in upper_density_profile(&zs, &radii)?.entries {
        println!("r = {:>5}: {:>3} zeros in [{}, {}+r)", e.r, e.count, e.anchor, e.anchor);
    }

    let half = parse_zero_set("re,im\n0,1\n0.5,1\n1,1\n1.5,2\n2,1\n")?;
    println!("separation of the half-integers: {}", separation_constant(&half)?);
    let split = decompose_uniformly_discrete(&half, 1.0)?;
    for (i, class) in split.classes.iter().enumerate() {
        let re: Vec<f64> = class.points().iter().map(|p| p.re).collect();
        println!("class {i}: {re:?}");
    }
    Ok(())
}
