//! Geometry of the hypercubic lattice Z^d.
//!
//! Directed edges out of a vertex are ranked by `(axis ascending, + before -)`,
//! so in two dimensions the order is `+x, -x, +y, -y`. Eden code bit positions
//! depend on this order; it must never change.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Coordinates never exceed this magnitude at supported enumeration sizes.
pub const COORD_LIMIT: i32 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex(Vec<i32>);

impl Vertex {
    pub fn new(coords: Vec<i32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(invalid("coords", "a vertex needs at least one coordinate"));
        }
        if coords.iter().any(|c| c.abs() > COORD_LIMIT) {
            return Err(invalid("coords", format!("coordinate magnitude above {COORD_LIMIT}")));
        }
        Ok(Vertex(coords))
    }

    pub fn origin(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Vertex(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    /// The vertex one step along `axis` in direction `sign`.
    pub fn step(&self, axis: usize, sign: Sign) -> Vertex {
        let mut c = self.0.clone();
        c[axis] += sign.delta();
        debug_assert!(c[axis].abs() <= COORD_LIMIT);
        Vertex(c)
    }

    pub fn translate(&self, shift: &[i32]) -> Vertex {
        assert_eq!(shift.len(), self.dim());
        Vertex(self.0.iter().zip(shift).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, coordinate-wise.
    pub fn offset_from(&self, other: &Vertex) -> Vec<i32> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

impl From<Vec<i32>> for Vertex {
    fn from(coords: Vec<i32>) -> Self {
        Vertex::new(coords).expect("valid vertex coordinates")
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn delta(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Lexicographic comparison: the first differing coordinate decides.
pub fn lex_compare(u: &Vertex, v: &Vertex) -> Result<Ordering> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(u.0.cmp(&v.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectedEdge {
    pub tail: Vertex,
    pub axis: usize,
    pub sign: Sign,
}

impl DirectedEdge {
    pub fn new(tail: Vertex, axis: usize, sign: Sign) -> Result<Self> {
        if axis >= tail.dim() {
            return Err(invalid("axis", format!("{axis} out of range for d={}", tail.dim())));
        }
        Ok(DirectedEdge { tail, axis, sign })
    }

    pub fn head(&self) -> Vertex {
        self.tail.step(self.axis, self.sign)
    }

    pub fn rank(&self) -> usize {
        direction_rank(self.axis, self.sign)
    }
}

/// Translation-invariant rank of a directed edge in `[0, 2d)`.
pub fn directed_edge_rank(e: &DirectedEdge) -> usize {
    e.rank()
}

#[inline]
pub fn direction_rank(axis: usize, sign: Sign) -> usize {
    2 * axis
        + match sign {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
}

#[inline]
pub fn direction_of_rank(rank: usize) -> (usize, Sign) {
    let sign = if rank.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
    (rank / 2, sign)
}

/// The 2d lattice neighbours of `v`, in rank order.
pub fn neighbors(v: &Vertex) -> Vec<Vertex> {
    (0..2 * v.dim())
        .map(|r| {
            let (axis, sign) = direction_of_rank(r);
            v.step(axis, sign)
        })
        .collect()
}

/// An edge of Z^d, stored with its lexicographically smaller endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UndirectedEdge {
    low: Vertex,
    axis: usize,
}

impl UndirectedEdge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        let diff = b.offset_from(&a);
        let nonzero: Vec<usize> = (0..diff.len()).filter(|&i| diff[i] != 0).collect();
        if nonzero.len() != 1 || diff[nonzero[0]].abs() != 1 {
            return Err(invalid("edge", format!("{a} and {b} are not adjacent")));
        }
        let axis = nonzero[0];
        let low = if diff[axis] > 0 { a } else { b };
        Ok(UndirectedEdge { low, axis })
    }

    /// The edge from `low` to `low + e_axis`.
    pub fn from_low(low: Vertex, axis: usize) -> Self {
        assert!(axis < low.dim());
        UndirectedEdge { low, axis }
    }

    pub fn low(&self) -> &Vertex {
        &self.low
    }

    pub fn high(&self) -> Vertex {
        self.low.step(self.axis, Sign::Plus)
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.low.clone(), self.high())
    }

    pub fn translate(&self, shift: &[i32]) -> Self {
        UndirectedEdge {
            low: self.low.translate(shift),
            axis: self.axis,
        }
    }

    /// All lattice edges sharing an endpoint with this one.
    pub fn incident_edges(&self) -> Vec<UndirectedEdge> {
        let (a, b) = self.endpoints();
        let mut out = Vec::with_capacity(4 * a.dim() - 2);
        for v in [a, b] {
            for e in edges_at(&v) {
                if e != *self {
                    out.push(e);
                }
            }
        }
        out
    }
}

/// The 2d edges incident to `v`, in rank order of the direction leaving `v`.
pub fn edges_at(v: &Vertex) -> Vec<UndirectedEdge> {
    (0..2 * v.dim())
        .map(|r| {
            let (axis, sign) = direction_of_rank(r);
            match sign {
                Sign::Plus => UndirectedEdge::from_low(v.clone(), axis),
                Sign::Minus => UndirectedEdge::from_low(v.step(axis, Sign::Minus), axis),
            }
        })
        .collect()
}
