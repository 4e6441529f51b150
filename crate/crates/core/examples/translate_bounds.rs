//! Translate between growth-rate and threshold bounds with f(r) = (1+r)^(1+r)/r^r.
//!
//!     cargo run --example translate_bounds

use lattice_growth::bounds::{
    f, f_inverse, growth_lower_from_pc_upper, kesten_growth_upper, pc_lower_from_growth_upper,
    BoundReport, Direction, Flavor, GrowthBound, GrowthQuantity, ThresholdBound,
};
use lattice_growth::enumeration::AnimalKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("f(1) = {}, f(2) = {}, f^-1(4) = {:.12}", f(1.0)?, f(2.0)?, f_inverse(4.0)?);

    // a published upper bound on the site-animal growth rate of Z^3
    let a = GrowthBound::input(GrowthQuantity::ADot, Some(3), 9.3835, Direction::Upper);
    let pc = pc_lower_from_growth_upper(&a)?;
    println!("{}", BoundReport::from_threshold(&pc, 4));
    println!("  via {}", pc.provenance.join(" -> "));

    // the hexagonal lattice: a threshold upper bound becomes a growth lower bound
    let hex = ThresholdBound::input(Flavor::Site, None, 0.69704, Direction::Upper);
    println!("{}", BoundReport::from_growth(&growth_lower_from_pc_upper(&hex)?, 5));

    // Kesten's bound needs no input at all
    for d in 2..=5 {
        let k = kesten_growth_upper(d, AnimalKind::Site)?;
        let p = pc_lower_from_growth_upper(&k)?;
        println!("d={d}: {}  =>  {}", BoundReport::from_growth(&k, 4), BoundReport::from_threshold(&p, 4));
    }
    Ok(())
}
