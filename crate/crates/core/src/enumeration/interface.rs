//! Two-dimensional interfaces via exterior flood fill over unit cells.
//!
//! Cell `(x, y)` is the unit square with lower-left corner `(x, y)`. Two
//! side-adjacent cells communicate iff the lattice edge between them is
//! absent. The grid is padded by one ring of cells beyond the bounding box;
//! everything reachable from the ring lies in the unbounded face.

use crate::error::{invalid, Result};
use crate::lattice::{edges_at, UndirectedEdge};

use super::{AnimalKind, LatticeAnimal};

/// An edge `(x, y, axis)` from `(x, y)` to `(x, y) + e_axis`.
pub(crate) type PlanarEdge = (i32, i32, usize);

pub(crate) struct Exterior {
    x0: i32,
    y0: i32,
    w: usize,
    h: usize,
    outside: Vec<bool>,
}

impl Exterior {
    pub fn compute(edges: &[PlanarEdge]) -> Self {
        let mut xmin = i32::MAX;
        let mut ymin = i32::MAX;
        let mut xmax = i32::MIN;
        let mut ymax = i32::MIN;
        for &(x, y, axis) in edges {
            let (hx, hy) = if axis == 0 { (x + 1, y) } else { (x, y + 1) };
            xmin = xmin.min(x);
            ymin = ymin.min(y);
            xmax = xmax.max(hx);
            ymax = ymax.max(hy);
        }
        // cells cover [xmin-1, xmax] x [ymin-1, ymax]
        let (x0, y0) = (xmin - 1, ymin - 1);
        let w = (xmax - x0 + 1) as usize;
        let h = (ymax - y0 + 1) as usize;

        // present[(vx, vy, axis)] over vertex offsets in [0, w] x [0, h]
        let vw = w + 1;
        let mut present = vec![false; vw * (h + 1) * 2];
        for &(x, y, axis) in edges {
            let i = ((y - y0) as usize * vw + (x - x0) as usize) * 2 + axis;
            present[i] = true;
        }
        let has = |x: i32, y: i32, axis: usize| -> bool {
            present[((y - y0) as usize * vw + (x - x0) as usize) * 2 + axis]
        };

        let mut outside = vec![false; w * h];
        let mut stack = Vec::new();
        for cy in 0..h {
            for cx in 0..w {
                if cx == 0 || cy == 0 || cx == w - 1 || cy == h - 1 {
                    outside[cy * w + cx] = true;
                    stack.push((cx, cy));
                }
            }
        }
        while let Some((cx, cy)) = stack.pop() {
            let (x, y) = (cx as i32 + x0, cy as i32 + y0);
            // right neighbour shares the vertical edge at x+1
            if cx + 1 < w && !outside[cy * w + cx + 1] && !has(x + 1, y, 1) {
                outside[cy * w + cx + 1] = true;
                stack.push((cx + 1, cy));
            }
            if cx > 0 && !outside[cy * w + cx - 1] && !has(x, y, 1) {
                outside[cy * w + cx - 1] = true;
                stack.push((cx - 1, cy));
            }
            if cy + 1 < h && !outside[(cy + 1) * w + cx] && !has(x, y + 1, 0) {
                outside[(cy + 1) * w + cx] = true;
                stack.push((cx, cy + 1));
            }
            if cy > 0 && !outside[(cy - 1) * w + cx] && !has(x, y, 0) {
                outside[(cy - 1) * w + cx] = true;
                stack.push((cx, cy - 1));
            }
        }
        Exterior {
            x0,
            y0,
            w,
            h,
            outside,
        }
    }

    pub fn cell_outside(&self, x: i32, y: i32) -> bool {
        let (cx, cy) = (x - self.x0, y - self.y0);
        if cx < 0 || cy < 0 || cx as usize >= self.w || cy as usize >= self.h {
            return true;
        }
        self.outside[cy as usize * self.w + cx as usize]
    }

    /// Whether either cell beside the edge lies in the unbounded face.
    pub fn edge_outside(&self, (x, y, axis): PlanarEdge) -> bool {
        if axis == 0 {
            self.cell_outside(x, y - 1) || self.cell_outside(x, y)
        } else {
            self.cell_outside(x - 1, y) || self.cell_outside(x, y)
        }
    }
}

pub(crate) fn all_edges_outside(edges: &[PlanarEdge]) -> bool {
    let ext = Exterior::compute(edges);
    edges.iter().all(|&e| ext.edge_outside(e))
}

fn planar_edges(p: &LatticeAnimal) -> Result<Vec<PlanarEdge>> {
    if p.dim() != 2 {
        return Err(invalid("d", format!("interfaces need d = 2, got {}", p.dim())));
    }
    if p.kind() == AnimalKind::Site {
        return Err(invalid("kind", "interfaces are bond animals"));
    }
    Ok(p.edges()
        .iter()
        .map(|e| (e.low().coords()[0], e.low().coords()[1], e.axis()))
        .collect())
}

/// True iff every edge of `p` borders the unbounded face of its plane embedding.
pub fn is_interface_2d(p: &LatticeAnimal) -> Result<bool> {
    Ok(all_edges_outside(&planar_edges(p)?))
}

/// The edges of the edge boundary that lie in the unbounded face.
pub fn interface_boundary_2d(p: &LatticeAnimal) -> Result<Vec<UndirectedEdge>> {
    let edges = planar_edges(p)?;
    let ext = Exterior::compute(&edges);
    if !edges.iter().all(|&e| ext.edge_outside(e)) {
        return Err(invalid("animal", "not an interface: some edge is enclosed"));
    }
    let own: std::collections::HashSet<UndirectedEdge> = p.edges().into_iter().collect();
    let mut out = std::collections::BTreeSet::new();
    for v in p.vertices() {
        for e in edges_at(&v) {
            if own.contains(&e) {
                continue;
            }
            let key = (e.low().coords()[0], e.low().coords()[1], e.axis());
            if ext.edge_outside(key) {
                out.insert(e);
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::boundary_stats;
    use crate::lattice::Vertex;

    fn e(a: [i32; 2], b: [i32; 2]) -> UndirectedEdge {
        UndirectedEdge::new(Vertex::from(a.to_vec()), Vertex::from(b.to_vec())).unwrap()
    }

    fn block_2x2() -> LatticeAnimal {
        let mut edges = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                if x < 2 {
                    edges.push(e([x, y], [x + 1, y]));
                }
                if y < 2 {
                    edges.push(e([x, y], [x, y + 1]));
                }
            }
        }
        LatticeAnimal::bond(edges).unwrap()
    }

    fn unit_square() -> LatticeAnimal {
        LatticeAnimal::bond(vec![
            e([0, 0], [1, 0]),
            e([1, 0], [1, 1]),
            e([0, 1], [1, 1]),
            e([0, 0], [0, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn single_edge_is_interface() {
        let p = LatticeAnimal::bond(vec![e([0, 0], [1, 0])]).unwrap();
        assert!(is_interface_2d(&p).unwrap());
        let boundary = interface_boundary_2d(&p).unwrap();
        assert_eq!(boundary.len(), 6);
        assert_eq!(boundary.len() as u64, boundary_stats(&p).edge_boundary);
    }

    #[test]
    fn unit_square_is_interface_with_full_boundary() {
        let p = unit_square();
        assert!(is_interface_2d(&p).unwrap());
        let boundary = interface_boundary_2d(&p).unwrap();
        assert_eq!(boundary.len(), 8);
        assert_eq!(boundary.len() as u64, boundary_stats(&p).edge_boundary);
    }

    #[test]
    fn full_block_is_not_interface() {
        let p = block_2x2();
        assert_eq!(p.size(), 12);
        assert!(!is_interface_2d(&p).unwrap());
        assert!(interface_boundary_2d(&p).is_err());
        let ext = Exterior::compute(&planar_edges(&p).unwrap());
        let enclosed: Vec<_> = p
            .edges()
            .iter()
            .map(|e| (e.low().coords()[0], e.low().coords()[1], e.axis()))
            .filter(|&k| !ext.edge_outside(k))
            .collect();
        // exactly the four edges at the centre vertex (1,1)
        assert_eq!(enclosed.len(), 4);
        for (x, y, axis) in enclosed {
            let touches_centre = (x, y) == (1, 1)
                || (axis == 0 && (x, y) == (0, 1))
                || (axis == 1 && (x, y) == (1, 0));
            assert!(touches_centre);
        }
    }

    #[test]
    fn wrong_dimension_rejected() {
        let p = LatticeAnimal::bond(vec![UndirectedEdge::from_low(Vertex::origin(3), 0)]).unwrap();
        assert!(is_interface_2d(&p).is_err());
        let s = LatticeAnimal::site(vec![Vertex::origin(2)]).unwrap();
        assert!(is_interface_2d(&s).is_err());
    }
}
