//! Cluster-size tails below, at and above the square-lattice site threshold.
//!
//!     cargo run --release --example cluster_tail -- 64 2000

use lattice_growth::bounds::Flavor;
use lattice_growth::percolation::{cluster_tail_curve, PercConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let side: usize = args.first().map_or(Ok(64), |s| s.parse())?;
    let trials: u64 = args.get(1).map_or(Ok(2000), |s| s.parse())?;
    let sizes = [1, 2, 5, 10, 20, 50, 100, 200];

    print!("{:>8}", "p");
    for n in sizes {
        print!("{:>10}", format!(">={n}"));
    }
    println!();
    for p in [0.3, 0.5, 0.5927, 0.7] {
        let cfg = PercConfig::new(2, side, Flavor::Site, p, trials, 1);
        let curve = cluster_tail_curve(&cfg, *sizes.last().unwrap())?;
        print!("{p:>8.4}");
        for n in sizes {
            print!("{:>10.5}", curve[n - 1].value);
        }
        println!();
    }
    Ok(())
}
