//! How much counting Eden turns improves on the crude growth bound f(2d-2).
//!
//!     cargo run --example improved_bound -- 2.0

use lattice_growth::bounds::{
    b_upper_crude, g_d, improved_check, improved_upper_bound, thm_pc_lower_formula,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c: f64 = std::env::args().nth(1).map_or(Ok(2.0), |s| s.parse())?;

    println!("g_d at the endpoints:");
    for d in [2, 3, 5, 10] {
        println!("  d={d}: g(0) = {:.6}, g(1) = {:.6}, 2 f(2d-2) = {:.6}", g_d(d, 0.0)?, g_d(d, 1.0)?, 2.0 * b_upper_crude(d)?);
    }

    println!("\n{:>6} {:>10} {:>14} {:>14} {:>12} {:>12}", "d", "z", "f(2d-2)", "f(2d-2-z)", "gap", "p lower");
    for d in [20, 28, 29, 50, 100, 1000, 10_000] {
        let crude = b_upper_crude(d)?;
        let p = thm_pc_lower_formula(d, c)?;
        match improved_upper_bound(d, c) {
            Ok(b) => println!("{d:>6} {:>10.6} {crude:>14.6} {:>14.6} {:>12.6} {p:>12.8}", b.z, b.bound, b.gap),
            Err(e) => println!("{d:>6} {:>10} {crude:>14.6} {:>14} {:>12} {p:>12.8}  ({e})", "-", "-", "-"),
        }
    }

    let (lhs, rhs) = improved_check(100, c, 0.5)?;
    println!("\ng_100(0.5) = {lhs:.6} <= C^2 e (2d-1) / (2d-2)^(1-x) = {rhs:.6}");
    Ok(())
}
