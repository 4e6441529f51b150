//! Estimate a percolation threshold by bisection on the crossing probability.
//!
//!     cargo run --release --example percolation_threshold -- 2 128 site 2000 7

use lattice_growth::bounds::Flavor;
use lattice_growth::percolation::{crossing_probability, estimate_threshold, PercConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let dim: usize = arg(0, "2").parse()?;
    let side: usize = arg(1, "64").parse()?;
    let flavor: Flavor = arg(2, "site").parse()?;
    let trials: u64 = arg(3, "300").parse()?;
    let seed: u64 = arg(4, "7").parse()?;

    let cfg = PercConfig::new(dim, side, flavor, 0.5, trials, seed);
    let est = estimate_threshold(&cfg)?;
    println!(
        "d={dim} L={side} {flavor:?}: threshold {:.5} +- {:.5} ({trials} trials per step)",
        est.value, est.half_width
    );

    for dp in [-0.03, 0.0, 0.03] {
        let p = (est.value + dp).clamp(0.0, 1.0);
        let c = crossing_probability(&PercConfig { p, ..cfg.clone() })?;
        println!("  crossing({p:.4}) = {:.3} +- {:.3}", c.value, c.half_width);
    }
    Ok(())
}
