//! Evaluate every registered 1/d expansion across dimensions.
//!
//!     cargo run --example expansions

use lattice_growth::bounds::{evaluate_expansion, expansions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dims = [3, 5, 10, 20, 50];
    print!("{:<22}", "");
    for d in dims {
        print!("{:>12}", format!("d={d}"));
    }
    println!();
    for spec in expansions() {
        print!("{:<22}", spec.name);
        for d in dims {
            print!("{:>12.6}", evaluate_expansion(spec, d)?);
        }
        println!("   {} + {} [{}]", spec.target, spec.error_order, spec.rigor);
    }
    Ok(())
}
