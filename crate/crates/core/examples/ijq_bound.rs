//! The binomial-sum bound on animals with few turns, against exact counts.
//!
//!     cargo run --release --example ijq_bound -- 3 6

use lattice_growth::eden::{ijq_upper_bound, max_turns_observed};
use lattice_growth::enumeration::{count_animals, AnimalKind, EnumConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let dim: usize = args.first().map_or(Ok(2), |s| s.parse())?;
    let n_max: usize = args.get(1).map_or(Ok(7), |s| s.parse())?;
    let cfg = EnumConfig::default();
    let exact = count_animals(dim, n_max, AnimalKind::Site, &cfg)?;

    println!("{:>3} {:>4} {:>14} {:>20}", "n", "q", "exact", "bound");
    for n in 1..=n_max {
        let q = max_turns_observed(dim, n, &cfg)?;
        let bound = ijq_upper_bound(dim, n, q);
        let count = &exact.lexmin[n - 1];
        assert!(&bound >= count);
        println!("{n:>3} {q:>4} {count:>14} {bound:>20}");
    }
    // with no turns allowed only straight rods survive
    println!("q = 0 at n = {n_max}: {}", ijq_upper_bound(dim, n_max, 0));
    Ok(())
}
