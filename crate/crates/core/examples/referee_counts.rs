//! Zeros of the second counterexample in the unit windows below 3^k,
//! counted in offset form.

use stripzeros::function_zoo::{count_claim_check, referee_example2, shift_to_strip};
use stripzeros::zero_model::blaschke_sum;

fn main() -> stripzeros::Result<()> {
    let model = referee_example2(30)?;
    println!(" k  count  k/2  verdict");
    for k in 2..=30 {
        let c = count_claim_check(&model, k)?;
        println!(
            "{k:>2}  {:>5}  {:>4.1}  {}",
            c.count,
            k as f64 / 2.0,
            if c.pass { "PASS" } else { "FAIL" }
        );
    }

    let d = model.delta_points().unwrap().iter().find(|d| d.k == 5 && d.n == 3).unwrap();
    println!("z_(5,3) = 3^5 - {:.5} = {:.5}", d.delta(), d.base() - d.delta());

    let shifted = shift_to_strip(&model, 1.0)?;
    println!("Blaschke sum after shifting by i: {:.6e}", blaschke_sum(&shifted.zero_set()?));
    println!("log|f(x - i)| at 0, 100, 3^10: {:.6} {:.6} {:.6}",
        shifted.log_modulus(0.0)?, shifted.log_modulus(100.0)?, shifted.log_modulus(59049.0)?);
    Ok(())
}
