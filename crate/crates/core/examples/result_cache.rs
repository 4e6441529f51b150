//! Reuse exact counts across runs through the on-disk cache.
//!
//!     cargo run --release --example result_cache -- /tmp/lattice-cache

use std::time::Instant;

use lattice_growth::cache::{Cache, Generator};
use lattice_growth::enumeration::{AnimalKind, EnumConfig, Rooting};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().join("lattice-cache-demo").display().to_string());
    let cache = Cache::new(&dir);
    let cfg = EnumConfig::default();

    for (n_max, label) in [(11, "first"), (11, "second"), (9, "shorter")] {
        let start = Instant::now();
        let (counts, used) = cache.counts(2, n_max, AnimalKind::Bond, Rooting::Lexmin, Generator::Fast, &cfg)?;
        println!(
            "{label:>8}: a_{n_max} = {} (hit: {}, stored: {}, {:.1?})",
            counts.at(n_max),
            used.hit,
            used.stored,
            start.elapsed()
        );
    }
    for (file, entry) in cache.list()? {
        println!("{dir}/{file}: n <= {}, {} generator", entry.n_max(), entry.generator.as_str());
    }
    Ok(())
}
