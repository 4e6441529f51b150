//! Encode a polyomino as an Eden bit string and decode it again.
//!
//!     cargo run --example eden_roundtrip

use lattice_growth::eden::{check_turn_bound, eden_decode, eden_encode, EdenCode};
use lattice_growth::enumeration::LatticeAnimal;
use lattice_growth::lattice::Vertex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a T tetromino, deliberately not at the origin
    let cells = [[5, 5], [6, 5], [7, 5], [6, 6]];
    let t = LatticeAnimal::site(cells.iter().map(|c| Vertex::from(c.to_vec())).collect())?;

    let (code, tree) = eden_encode(&t)?;
    println!("bits  {code}  ({} long, {} ones)", code.bits().len(), code.ones_count());
    println!("reveal order:");
    for (k, v) in tree.order.iter().enumerate() {
        let parent = tree.parent[k].map_or("root".to_string(), |p| tree.order[p].to_string());
        println!("  {k}: {v} from {parent}");
    }
    let check = check_turn_bound(&t)?;
    println!("turns {}: |dV| = {} <= {}", check.turns, check.lhs, check.rhs);

    let back = eden_decode(&code)?;
    println!("decoded: {}", back.cells().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    assert_eq!(back, t.lexmin_rooted());

    // not every string with the right shape is a code
    for s in ["2:10001000", "2:00110000"] {
        let code: EdenCode = s.parse()?;
        match eden_decode(&code) {
            Ok(a) => println!("{s} -> {}", a.cells().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
            Err(e) => println!("{s}: {e}"),
        }
    }
    Ok(())
}
