//! Length-3 mean oscillation of H[log|F|] along three model families: a
//! growing cluster, the second counterexample and the sine-type control.

use stripzeros::cli::scan_family;
use stripzeros::hilbert_bmo::ScanConfig;

fn main() -> stripzeros::Result<()> {
    let cfg = ScanConfig::default();

    println!("cluster of K zeros at 1/2 + i");
    for r in scan_family("cluster", &[12, 60, 120, 240], 1.0, None, &cfg)? {
        println!("  K = {:>3}: {:>9.4}   K/12 - 1 = {:.2}", r.k, r.bound, r.k as f64 / 12.0 - 1.0);
    }

    println!("second counterexample shifted by i");
    let ks: Vec<u64> = (2..=30).step_by(2).collect();
    for r in scan_family("example2", &ks, 1.0, None, &cfg)? {
        println!("  k_max = {:>2}: {:>8.4}  near {:.1}", r.k, r.bound, r.witness.0);
    }

    println!("sin(pi(z - i)) truncated to |n| <= N");
    for r in scan_family("sine", &[100, 200, 400], 1.0, None, &cfg)? {
        println!("  N = {:>3}: {:.6}", r.k, r.bound);
    }
    Ok(())
}
