//! Brute-force ground truth: breadth-first growth of explicit animals with
//! canonical-form deduplication. Slow and single-threaded on purpose; it is
//! only used to validate the fast counting path.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::lattice::{UndirectedEdge, Vertex};

use super::{AnimalKind, LatticeAnimal, Rooting};

/// Refuse when the predicted output exceeds this many animals. The
/// prediction is a crude upper bound, so the real output is far smaller.
pub const DEFAULT_CAP: u64 = 100_000_000;

type Point = Vec<i32>;
type Bond = (Point, usize);

fn predicted_size(dim: usize, n: usize) -> f64 {
    if dim == 1 {
        return (n + 1) as f64;
    }
    let s = (2 * dim - 1) as f64;
    let growth = s.powf(s) / (s - 1.0).powf(s - 1.0);
    growth.powi(n as i32) * (s / (s - 1.0)).powi(2 * dim as i32)
}

/// Every animal of `kind` with exactly `n` cells under `rooting`, sorted.
pub fn enumerate_oracle(
    dim: usize,
    n: usize,
    kind: AnimalKind,
    rooting: Rooting,
) -> Result<Vec<LatticeAnimal>> {
    enumerate_oracle_capped(dim, n, kind, rooting, DEFAULT_CAP)
}

pub fn enumerate_oracle_capped(
    dim: usize,
    n: usize,
    kind: AnimalKind,
    rooting: Rooting,
    cap: u64,
) -> Result<Vec<LatticeAnimal>> {
    if dim == 0 || n == 0 {
        return Err(invalid("n", "dimension and size must be positive"));
    }
    if kind == AnimalKind::Interface2d && dim != 2 {
        return Err(invalid("d", "interfaces need d = 2"));
    }
    let predicted = predicted_size(dim, n);
    if predicted > cap as f64 {
        return Err(Error::OracleCap { predicted, cap });
    }

    let mut out = Vec::new();
    if kind.is_site() {
        for shape in grow_sites(dim, n) {
            let shifts: Vec<Point> = match rooting {
                Rooting::Lexmin => vec![vec![0; dim]],
                Rooting::Origin => shape.iter().map(|p| p.iter().map(|c| -c).collect()).collect(),
            };
            for s in shifts {
                let cells = shape.iter().map(|p| Vertex::from(add(p, &s))).collect();
                out.push(LatticeAnimal::site(cells)?);
            }
        }
    } else {
        for shape in grow_bonds(dim, n) {
            let keep = match kind {
                AnimalKind::Bond => true,
                AnimalKind::Tree => bond_vertices(&shape).len() == shape.len() + 1,
                AnimalKind::Interface2d => every_edge_sees_infinity(&shape),
                AnimalKind::Site => unreachable!(),
            };
            if !keep {
                continue;
            }
            let shifts: Vec<Point> = match rooting {
                Rooting::Lexmin => vec![vec![0; dim]],
                Rooting::Origin => bond_vertices(&shape)
                    .iter()
                    .map(|p| p.iter().map(|c| -c).collect())
                    .collect(),
            };
            for s in shifts {
                let edges = shape
                    .iter()
                    .map(|(p, axis)| UndirectedEdge::from_low(Vertex::from(add(p, &s)), *axis))
                    .collect();
                out.push(LatticeAnimal::bond_like(kind, edges)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn add(p: &[i32], s: &[i32]) -> Point {
    p.iter().zip(s).map(|(a, b)| a + b).collect()
}

fn unit(dim: usize, axis: usize, delta: i32) -> Point {
    let mut u = vec![0; dim];
    u[axis] = delta;
    u
}

fn canonical_sites(set: &BTreeSet<Point>) -> BTreeSet<Point> {
    let min = set.iter().min().expect("nonempty").clone();
    let neg: Point = min.iter().map(|c| -c).collect();
    set.iter().map(|p| add(p, &neg)).collect()
}

fn grow_sites(dim: usize, n: usize) -> BTreeSet<BTreeSet<Point>> {
    let mut level: BTreeSet<BTreeSet<Point>> = BTreeSet::new();
    level.insert(BTreeSet::from([vec![0; dim]]));
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for shape in &level {
            for p in shape {
                for axis in 0..dim {
                    for delta in [1, -1] {
                        let q = add(p, &unit(dim, axis, delta));
                        if shape.contains(&q) {
                            continue;
                        }
                        let mut bigger = shape.clone();
                        bigger.insert(q);
                        next.insert(canonical_sites(&bigger));
                    }
                }
            }
        }
        level = next;
    }
    level
}

fn bond_vertices(shape: &BTreeSet<Bond>) -> BTreeSet<Point> {
    let mut vs = BTreeSet::new();
    for (p, axis) in shape {
        vs.insert(p.clone());
        vs.insert(add(p, &unit(p.len(), *axis, 1)));
    }
    vs
}

fn canonical_bonds(shape: &BTreeSet<Bond>) -> BTreeSet<Bond> {
    let min = bond_vertices(shape).into_iter().next().expect("nonempty");
    let neg: Point = min.iter().map(|c| -c).collect();
    shape.iter().map(|(p, a)| (add(p, &neg), *a)).collect()
}

fn grow_bonds(dim: usize, n: usize) -> BTreeSet<BTreeSet<Bond>> {
    let mut level: BTreeSet<BTreeSet<Bond>> = (0..dim)
        .map(|axis| BTreeSet::from([(vec![0; dim], axis)]))
        .collect();
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for shape in &level {
            for v in bond_vertices(shape) {
                for axis in 0..dim {
                    for low in [v.clone(), add(&v, &unit(dim, axis, -1))] {
                        let e = (low, axis);
                        if shape.contains(&e) {
                            continue;
                        }
                        let mut bigger = shape.clone();
                        bigger.insert(e);
                        next.insert(canonical_bonds(&bigger));
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// Planar test written independently of the fast path: BFS over the faces
/// of the unit-square grid inside a box one unit larger than the shape.
fn every_edge_sees_infinity(shape: &BTreeSet<Bond>) -> bool {
    let verts = bond_vertices(shape);
    let xs = verts.iter().map(|p| p[0]);
    let ys = verts.iter().map(|p| p[1]);
    let (x_lo, x_hi) = (xs.clone().min().unwrap() - 1, xs.max().unwrap());
    let (y_lo, y_hi) = (ys.clone().min().unwrap() - 1, ys.max().unwrap());
    let wall: HashSet<((i32, i32), (i32, i32))> = shape
        .iter()
        .map(|(p, axis)| {
            let a = (p[0], p[1]);
            let b = if *axis == 0 { (p[0] + 1, p[1]) } else { (p[0], p[1] + 1) };
            (a, b)
        })
        .collect();

    let inside = |c: (i32, i32)| c.0 >= x_lo && c.0 <= x_hi && c.1 >= y_lo && c.1 <= y_hi;
    let mut free: HashSet<(i32, i32)> = HashSet::new();
    let mut queue = VecDeque::new();
    for x in x_lo..=x_hi {
        for y in y_lo..=y_hi {
            if x == x_lo || x == x_hi || y == y_lo || y == y_hi {
                free.insert((x, y));
                queue.push_back((x, y));
            }
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        // (segment separating the two squares, neighbouring square)
        let moves = [
            (((x + 1, y), (x + 1, y + 1)), (x + 1, y)),
            (((x, y), (x, y + 1)), (x - 1, y)),
            (((x, y + 1), (x + 1, y + 1)), (x, y + 1)),
            (((x, y), (x + 1, y)), (x, y - 1)),
        ];
        for (seg, nb) in moves {
            if inside(nb) && !free.contains(&nb) && !wall.contains(&seg) {
                free.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    let square_free = |c: (i32, i32)| !inside(c) || free.contains(&c);
    shape.iter().all(|(p, axis)| {
        let (x, y) = (p[0], p[1]);
        if *axis == 0 {
            square_free((x, y)) || square_free((x, y - 1))
        } else {
            square_free((x, y)) || square_free((x - 1, y))
        }
    })
}
