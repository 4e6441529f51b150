//! Two-dimensional interfaces sit between lattice trees and bond animals.
//!
//!     cargo run --release --example interfaces_2d -- 9

use lattice_growth::enumeration::{
    count_animals, interface_boundary_2d, AnimalKind, EnumConfig, LatticeAnimal,
};
use lattice_growth::lattice::{UndirectedEdge, Vertex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;
    let cfg = EnumConfig::default();
    let trees = count_animals(2, n_max, AnimalKind::Tree, &cfg)?;
    let faces = count_animals(2, n_max, AnimalKind::Interface2d, &cfg)?;
    let bonds = count_animals(2, n_max, AnimalKind::Bond, &cfg)?;
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "trees", "interfaces", "bond");
    for n in 0..n_max {
        println!("{:>3} {:>12} {:>12} {:>12}", n + 1, trees.lexmin[n], faces.lexmin[n], bonds.lexmin[n]);
    }

    // the unit square: every edge touches the outside, and so do all of its
    // eight boundary edges
    let v = |x: i32, y: i32| Vertex::from(vec![x, y]);
    let edge = |a, b| UndirectedEdge::new(a, b).unwrap();
    let square = LatticeAnimal::interface_2d(vec![
        edge(v(0, 0), v(1, 0)),
        edge(v(0, 0), v(0, 1)),
        edge(v(1, 0), v(1, 1)),
        edge(v(0, 1), v(1, 1)),
    ])?;
    println!("\nunit square interface boundary: {} edges", interface_boundary_2d(&square)?.len());
    Ok(())
}
