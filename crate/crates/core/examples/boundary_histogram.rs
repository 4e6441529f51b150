//! Distribution of boundary-to-size ratios among animals of one size.
//!
//!     cargo run --release --example boundary_histogram -- 2 10 site 0.1

use lattice_growth::enumeration::{ratio_histogram, AnimalKind, EnumConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let dim: usize = args.first().map_or(Ok(2), |s| s.parse())?;
    let n: usize = args.get(1).map_or(Ok(9), |s| s.parse())?;
    let kind: AnimalKind = args.get(2).map_or("site", String::as_str).parse()?;
    let eps: f64 = args.get(3).map_or(Ok(0.1), |s| s.parse())?;

    let h = ratio_histogram(dim, n, kind, eps, &EnumConfig::default())?;
    let total = h.total();
    let widest = h.bins.values().max().cloned().unwrap_or_default();
    println!("{kind} animals, d={dim}, n={n}: {total} in total");
    for (&k, count) in &h.bins {
        let bar = (count * 50u32 / &widest).to_string().parse::<usize>().unwrap_or(0);
        println!(
            "[{:>5.2}, {:>5.2})  {:>10}  {}",
            h.bin_lower_edge(k),
            h.bin_lower_edge(k + 1),
            count,
            "#".repeat(bar)
        );
    }
    println!("\nby exact boundary size:");
    for (b, count) in &h.by_boundary {
        println!("  |boundary| = {b:>3}: {count}");
    }
    Ok(())
}
