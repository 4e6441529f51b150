//! Exact counts of fixed lattice animals.
//!
//!     cargo run --release --example enumerate_polyominoes -- 2 12 site

use lattice_growth::enumeration::{count_animals, AnimalKind, EnumConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let dim: usize = args.first().map_or(Ok(2), |s| s.parse())?;
    let n_max: usize = args.get(1).map_or(Ok(10), |s| s.parse())?;
    let kind: AnimalKind = args.get(2).map_or("site", String::as_str).parse()?;

    let r = count_animals(dim, n_max, kind, &EnumConfig::default())?;
    println!("{kind} animals in Z^{dim} ({} search nodes)", r.nodes);
    println!("{:>3} {:>20} {:>22}", "n", "lexmin-rooted", "containing origin");
    for n in 1..=n_max {
        println!("{n:>3} {:>20} {:>22}", r.lexmin[n - 1], r.origin[n - 1]);
    }
    // successive ratios creep up toward the growth rate
    if n_max >= 2 {
        let last = |k: usize| r.lexmin[k - 1].to_string().parse::<f64>().unwrap();
        println!("a_{n_max}/a_{} = {:.4}", n_max - 1, last(n_max) / last(n_max - 1));
    }
    Ok(())
}
