//! Exact enumeration of lattice animals.
//!
//! The fast path is a Redelmeier untried-set search rooted at the
//! lexicographically smallest cell ([`count_animals`] and friends). The
//! [`oracle`] grows explicit animal lists breadth-first and deduplicates by
//! canonical form; it shares no code with the fast path beyond the lattice
//! primitives.

mod boundary;
mod counts;
mod grid;
mod interface;
pub mod oracle;
mod redelmeier;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lattice::{neighbors, UndirectedEdge, Vertex};

pub use boundary::{boundary_stats, ratio_histogram, BoundaryStats, RatioHistogram};
pub use counts::{
    count_animals, count_bond_animals, count_interfaces_2d, count_lattice_trees,
    count_site_animals, for_each_animal, CountResult, Counts, EnumConfig,
};
pub use interface::{interface_boundary_2d, is_interface_2d};
pub use oracle::{enumerate_oracle, enumerate_oracle_capped};

/// The families of animals this crate counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AnimalKind {
    /// Connected vertex sets (polycubes); size is the vertex count.
    Site,
    /// Connected edge sets; size is the edge count.
    Bond,
    /// Acyclic connected edge sets.
    Tree,
    /// Two-dimensional bond animals whose every edge touches the unbounded face.
    #[serde(rename = "interface2d")]
    Interface2d,
}

impl AnimalKind {
    pub const ALL: [AnimalKind; 4] = [
        AnimalKind::Site,
        AnimalKind::Bond,
        AnimalKind::Tree,
        AnimalKind::Interface2d,
    ];

    pub fn is_site(self) -> bool {
        self == AnimalKind::Site
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AnimalKind::Site => "site",
            AnimalKind::Bond => "bond",
            AnimalKind::Tree => "tree",
            AnimalKind::Interface2d => "interface2d",
        }
    }
}

impl fmt::Display for AnimalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AnimalKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AnimalKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| invalid("kind", format!("unknown kind `{s}`")))
    }
}

/// How animals are pinned down in space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rooting {
    /// One representative per translation class: the lexicographically
    /// smallest vertex sits at the origin.
    Lexmin,
    /// Every translate containing the origin is counted.
    Origin,
}

impl Rooting {
    pub fn as_str(self) -> &'static str {
        match self {
            Rooting::Lexmin => "lexmin",
            Rooting::Origin => "origin",
        }
    }
}

impl fmt::Display for Rooting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rooting {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lexmin" => Ok(Rooting::Lexmin),
            "origin" => Ok(Rooting::Origin),
            _ => Err(invalid("rooting", format!("unknown rooting `{s}`"))),
        }
    }
}

/// A finite connected structure in Z^d.
///
/// Site animals store their vertex set; the bond-like kinds store their edge
/// set. Both are kept sorted, so structural equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeAnimal {
    dim: usize,
    kind: AnimalKind,
    cells: Vec<Vertex>,
    edges: Vec<UndirectedEdge>,
}

impl LatticeAnimal {
    pub fn site(cells: Vec<Vertex>) -> Result<Self> {
        let dim = common_dim(cells.iter().map(Vertex::dim))?;
        let set: BTreeSet<Vertex> = cells.into_iter().collect();
        let cells: Vec<Vertex> = set.into_iter().collect();
        if !vertices_connected(&cells) {
            return Err(Error::MalformedAnimal("vertex set is not connected".into()));
        }
        Ok(LatticeAnimal {
            dim,
            kind: AnimalKind::Site,
            cells,
            edges: Vec::new(),
        })
    }

    pub fn bond(edges: Vec<UndirectedEdge>) -> Result<Self> {
        Self::bond_like(AnimalKind::Bond, edges)
    }

    pub fn tree(edges: Vec<UndirectedEdge>) -> Result<Self> {
        Self::bond_like(AnimalKind::Tree, edges)
    }

    pub fn interface_2d(edges: Vec<UndirectedEdge>) -> Result<Self> {
        Self::bond_like(AnimalKind::Interface2d, edges)
    }

    pub fn bond_like(kind: AnimalKind, edges: Vec<UndirectedEdge>) -> Result<Self> {
        if kind.is_site() {
            return Err(invalid("kind", "site animals are built from vertices"));
        }
        let dim = common_dim(edges.iter().map(|e| e.low().dim()))?;
        let set: BTreeSet<UndirectedEdge> = edges.into_iter().collect();
        let edges: Vec<UndirectedEdge> = set.into_iter().collect();
        let animal = LatticeAnimal {
            dim,
            kind,
            cells: Vec::new(),
            edges,
        };
        if !animal.edges_connected() {
            return Err(Error::MalformedAnimal("edge set is not connected".into()));
        }
        match kind {
            AnimalKind::Tree if animal.vertices().len() != animal.edges.len() + 1 => {
                return Err(Error::MalformedAnimal("edge set contains a cycle".into()))
            }
            AnimalKind::Interface2d => {
                if dim != 2 {
                    return Err(invalid("d", "interfaces are only defined in two dimensions"));
                }
                if !is_interface_2d(&animal)? {
                    return Err(Error::MalformedAnimal(
                        "an edge does not touch the unbounded face".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(animal)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> AnimalKind {
        self.kind
    }

    /// Vertex count for site animals, edge count otherwise.
    pub fn size(&self) -> usize {
        if self.kind.is_site() {
            self.cells.len()
        } else {
            self.edges.len()
        }
    }

    /// Sorted vertex set (cells, or edge endpoints).
    pub fn vertices(&self) -> Vec<Vertex> {
        if self.kind.is_site() {
            return self.cells.clone();
        }
        let mut set = BTreeSet::new();
        for e in &self.edges {
            let (a, b) = e.endpoints();
            set.insert(a);
            set.insert(b);
        }
        set.into_iter().collect()
    }

    /// Sorted edge set; for site animals, the induced edges.
    pub fn edges(&self) -> Vec<UndirectedEdge> {
        if !self.kind.is_site() {
            return self.edges.clone();
        }
        let set: HashSet<&Vertex> = self.cells.iter().collect();
        let mut out = Vec::new();
        for v in &self.cells {
            for axis in 0..self.dim {
                let w = v.step(axis, crate::lattice::Sign::Plus);
                if set.contains(&w) {
                    out.push(UndirectedEdge::from_low(v.clone(), axis));
                }
            }
        }
        out.sort();
        out
    }

    pub fn cells(&self) -> &[Vertex] {
        &self.cells
    }

    pub fn lexmin_vertex(&self) -> Vertex {
        if self.kind.is_site() {
            self.cells[0].clone()
        } else {
            // the smallest edge starts at the smallest vertex
            self.edges[0].low().clone()
        }
    }

    pub fn is_lexmin_rooted(&self) -> bool {
        self.lexmin_vertex() == Vertex::origin(self.dim)
    }

    pub fn translate(&self, shift: &[i32]) -> Self {
        let mut cells: Vec<Vertex> = self.cells.iter().map(|v| v.translate(shift)).collect();
        let mut edges: Vec<UndirectedEdge> = self.edges.iter().map(|e| e.translate(shift)).collect();
        cells.sort();
        edges.sort();
        LatticeAnimal {
            dim: self.dim,
            kind: self.kind,
            cells,
            edges,
        }
    }

    /// The translate whose lexicographically smallest vertex is the origin.
    pub fn lexmin_rooted(&self) -> Self {
        let shift: Vec<i32> = self.lexmin_vertex().coords().iter().map(|c| -c).collect();
        self.translate(&shift)
    }

    fn edges_connected(&self) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        let verts = self.vertices();
        let index: std::collections::HashMap<&Vertex, usize> =
            verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        for e in &self.edges {
            let (a, b) = e.endpoints();
            let (ia, ib) = (index[&a], index[&b]);
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        let mut seen = vec![false; verts.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == verts.len()
    }
}

impl fmt::Display for LatticeAnimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_site() {
            let parts: Vec<String> = self.cells.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(" "))
        } else {
            let parts: Vec<String> = self
                .edges
                .iter()
                .map(|e| format!("{}-{}", e.low(), e.high()))
                .collect();
            write!(f, "{{{}}}", parts.join(" "))
        }
    }
}

fn common_dim(mut dims: impl Iterator<Item = usize>) -> Result<usize> {
    let first = dims
        .next()
        .ok_or_else(|| Error::MalformedAnimal("an animal needs at least one cell".into()))?;
    for d in dims {
        if d != first {
            return Err(Error::DimensionMismatch {
                left: first,
                right: d,
            });
        }
    }
    Ok(first)
}

fn vertices_connected(cells: &[Vertex]) -> bool {
    let set: HashSet<&Vertex> = cells.iter().collect();
    let mut seen: HashSet<Vertex> = HashSet::from([cells[0].clone()]);
    let mut queue = VecDeque::from([cells[0].clone()]);
    while let Some(u) = queue.pop_front() {
        for w in neighbors(&u) {
            if set.contains(&w) && !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    seen.len() == cells.len()
}
