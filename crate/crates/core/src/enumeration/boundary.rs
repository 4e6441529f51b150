use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::lattice::{edges_at, neighbors, Vertex};

use super::{for_each_animal, interface_boundary_2d, AnimalKind, EnumConfig, LatticeAnimal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryStats {
    pub size_n: u64,
    /// Vertices outside the animal with a neighbour inside.
    pub vertex_boundary: u64,
    /// Edges with an endpoint in the animal that are not part of it.
    pub edge_boundary: u64,
}

impl BoundaryStats {
    /// Cap from the degree-counting argument: `(2d-2)n + 2` on the vertex
    /// boundary of site animals, `(2d-2)n + 2d` on the edge boundary of
    /// bond animals.
    pub fn degree_cap(dim: usize, kind: AnimalKind, n: u64) -> u64 {
        let d = dim as u64;
        match kind {
            AnimalKind::Site => (2 * d - 2) * n + 2,
            _ => (2 * d - 2) * n + 2 * d,
        }
    }

    pub fn within_degree_cap(&self, dim: usize, kind: AnimalKind) -> bool {
        let cap = Self::degree_cap(dim, kind, self.size_n);
        match kind {
            AnimalKind::Site => self.vertex_boundary <= cap,
            _ => self.edge_boundary <= cap,
        }
    }
}

pub fn boundary_stats(x: &LatticeAnimal) -> BoundaryStats {
    let verts = x.vertices();
    let vset: HashSet<&Vertex> = verts.iter().collect();
    let own: HashSet<_> = x.edges().into_iter().collect();

    let mut outer = HashSet::new();
    for v in &verts {
        for w in neighbors(v) {
            if !vset.contains(&w) {
                outer.insert(w);
            }
        }
    }
    let mut touching = HashSet::new();
    for v in &verts {
        for e in edges_at(v) {
            if !own.contains(&e) {
                touching.insert(e);
            }
        }
    }
    BoundaryStats {
        size_n: x.size() as u64,
        vertex_boundary: outer.len() as u64,
        edge_boundary: touching.len() as u64,
    }
}

/// Exact counts of size-`n` animals binned by boundary-to-size ratio.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioHistogram {
    pub dim: usize,
    pub size_n: usize,
    pub kind: AnimalKind,
    pub bin_width: f64,
    /// `floor(ratio / bin_width)` -> count.
    pub bins: BTreeMap<u64, BigUint>,
    /// Exact boundary size -> count, before binning.
    pub by_boundary: BTreeMap<u64, BigUint>,
    pub partial: bool,
}

impl RatioHistogram {
    pub fn total(&self) -> BigUint {
        self.bins.values().sum()
    }

    /// Lower edge of bin `k`.
    pub fn bin_lower_edge(&self, k: u64) -> f64 {
        k as f64 * self.bin_width
    }
}

/// The boundary that stratifies a kind: vertex boundary for site animals,
/// interface boundary for 2D interfaces, edge boundary otherwise.
pub(crate) fn stratifying_boundary(x: &LatticeAnimal) -> u64 {
    match x.kind() {
        AnimalKind::Site => boundary_stats(x).vertex_boundary,
        AnimalKind::Interface2d => interface_boundary_2d(x)
            .expect("enumerated interfaces are valid")
            .len() as u64,
        _ => boundary_stats(x).edge_boundary,
    }
}

/// Histogram over lexmin-rooted animals of size `n`. A ratio falling exactly
/// on a bin edge `k * eps` is placed in bin `k`.
pub fn ratio_histogram(
    dim: usize,
    n: usize,
    kind: AnimalKind,
    eps: f64,
    cfg: &EnumConfig,
) -> Result<RatioHistogram> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(invalid("epsilon", "bin width must be positive"));
    }
    let width = Ratio::<i64>::approximate_float(eps)
        .filter(|r| *r.numer() > 0)
        .ok_or_else(|| invalid("epsilon", "bin width not representable"))?;
    let (num, den) = (*width.numer() as u128, *width.denom() as u128);

    let mut by_boundary: BTreeMap<u64, u64> = BTreeMap::new();
    let partial = for_each_animal(dim, n, kind, cfg, |x| {
        if x.size() == n {
            *by_boundary.entry(stratifying_boundary(x)).or_default() += 1;
        }
    })?;

    let mut bins: BTreeMap<u64, BigUint> = BTreeMap::new();
    for (&b, &c) in &by_boundary {
        // floor((b / n) / (num / den))
        let k = (b as u128 * den) / (n as u128 * num);
        *bins.entry(k as u64).or_default() += BigUint::from(c);
    }
    Ok(RatioHistogram {
        dim,
        size_n: n,
        kind,
        bin_width: eps,
        bins,
        by_boundary: by_boundary
            .into_iter()
            .map(|(b, c)| (b, BigUint::from(c)))
            .collect(),
        partial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UndirectedEdge;

    fn v(c: &[i32]) -> Vertex {
        Vertex::from(c.to_vec())
    }

    #[test]
    fn straight_triomino() {
        let x = LatticeAnimal::site(vec![v(&[0, 0]), v(&[1, 0]), v(&[2, 0])]).unwrap();
        let s = boundary_stats(&x);
        assert_eq!(s.vertex_boundary, 8);
        assert_eq!(s.vertex_boundary, BoundaryStats::degree_cap(2, AnimalKind::Site, 3));
    }

    #[test]
    fn single_vertex() {
        let x = LatticeAnimal::site(vec![Vertex::origin(2)]).unwrap();
        let s = boundary_stats(&x);
        assert_eq!((s.vertex_boundary, s.edge_boundary), (4, 4));
    }

    #[test]
    fn single_edge_d3() {
        let x = LatticeAnimal::bond(vec![UndirectedEdge::from_low(Vertex::origin(3), 0)]).unwrap();
        let s = boundary_stats(&x);
        assert_eq!(s.edge_boundary, 10);
        assert!(s.within_degree_cap(3, AnimalKind::Bond));
    }

    #[test]
    fn histogram_n1() {
        let h = ratio_histogram(2, 1, AnimalKind::Site, 0.05, &EnumConfig::default()).unwrap();
        assert_eq!(h.bins.len(), 1);
        let (&k, c) = h.bins.iter().next().unwrap();
        assert_eq!(k, 80);
        assert_eq!(h.bin_lower_edge(k), 4.0);
        assert_eq!(*c, BigUint::from(1u32));
    }

    #[test]
    fn histogram_triominoes() {
        let h = ratio_histogram(2, 3, AnimalKind::Site, 0.05, &EnumConfig::default()).unwrap();
        assert_eq!(h.by_boundary[&8], BigUint::from(2u32));
        assert_eq!(h.by_boundary[&7], BigUint::from(4u32));
        // 8/3 and 7/3 in units of 1/20
        assert_eq!(h.bins[&53], BigUint::from(2u32));
        assert_eq!(h.bins[&46], BigUint::from(4u32));
        assert_eq!(h.total(), BigUint::from(6u32));
    }

    #[test]
    fn histogram_rejects_bad_epsilon() {
        assert!(ratio_histogram(2, 2, AnimalKind::Site, 0.0, &EnumConfig::default()).is_err());
        assert!(ratio_histogram(2, 2, AnimalKind::Site, -1.0, &EnumConfig::default()).is_err());
    }
}
