//! The continuous argument branch of one Blaschke factor across its jump
//! point, and the growth of the sum over a dense cluster.

use stripzeros::blaschke_arg::{
    find_growth_window, growth_constant, phi, phi_derivative, phi_sum,
};
use stripzeros::zero_model::{StripPoint, ZeroSet};

fn main() -> stripzeros::Result<()> {
    let z = StripPoint::new(3.0, 2.0, 1)?;
    let jump = z.norm_sqr() / z.re;
    println!("z = 3+2i, |z|^2/x = {jump}");
    for t in [-5.0, 0.0, jump - 1e-6, jump, jump + 1e-6, 10.0, 1e8] {
        let v = phi(&z, t);
        println!(
            "  t = {t:>14.6}  phi = {:.10}  phi' = {:.3e}  {:?}",
            v.value,
            phi_derivative(&z, t),
            v.region
        );
    }

    let c = growth_constant(1.0, 1.0)?;
    println!("growth constant for Im z = 1: {c}");

    let cluster = ZeroSet::from_pairs((0..100).map(|k| (k as f64 / 100.0, 1.0)))?;
    let window = find_growth_window(&cluster, 50.0)?.expect("dense enough");
    println!(
        "100 zeros in [0, 1): window a = {:.4}, count {}, increment {:.4}",
        window.a, window.count, window.increment
    );
    let s = phi_sum(&cluster, 0.5, 10.0)?;
    println!("Phi(0.5) with |z| <= 10: {:.6} (tail bound {:.1e})", s.value, s.tail_bound.abs());
    Ok(())
}
