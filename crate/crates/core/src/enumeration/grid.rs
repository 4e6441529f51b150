use crate::lattice::{UndirectedEdge, Vertex};

/// A box `[-radius, radius]^d` flattened in mixed radix with axis 0 most
/// significant, so index order equals lexicographic order of vertices.
#[derive(Clone, Debug)]
pub(crate) struct Grid {
    pub dim: usize,
    pub radius: i32,
    pub strides: Vec<usize>,
    pub len: usize,
}

impl Grid {
    pub fn new(dim: usize, radius: i32) -> Self {
        let width = (2 * radius + 1) as usize;
        let mut strides = vec![1; dim];
        for k in (0..dim.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * width;
        }
        let len = strides[0] * width;
        Grid {
            dim,
            radius,
            strides,
            len,
        }
    }

    pub fn index(&self, coords: &[i32]) -> usize {
        debug_assert_eq!(coords.len(), self.dim);
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| {
                debug_assert!(c.abs() <= self.radius);
                (c + self.radius) as usize * s
            })
            .sum()
    }

    pub fn coords(&self, mut idx: usize) -> Vec<i32> {
        let mut out = vec![0; self.dim];
        for k in 0..self.dim {
            out[k] = (idx / self.strides[k]) as i32 - self.radius;
            idx %= self.strides[k];
        }
        out
    }

    pub fn origin(&self) -> usize {
        self.index(&vec![0; self.dim])
    }

    pub fn on_border(&self, idx: usize) -> bool {
        self.coords(idx).iter().any(|c| c.abs() == self.radius)
    }
}

/// The cells a Redelmeier search runs over: lattice vertices for site
/// animals, lattice edges (indexed `vertex * d + axis`) for bond-like kinds.
#[derive(Clone, Debug)]
pub(crate) enum CellSpace {
    Site(Grid),
    Bond(Grid),
}

impl CellSpace {
    pub fn for_site(dim: usize, n_max: usize) -> Self {
        CellSpace::Site(Grid::new(dim, n_max as i32))
    }

    pub fn for_bond(dim: usize, n_max: usize) -> Self {
        CellSpace::Bond(Grid::new(dim, n_max as i32 + 1))
    }

    pub fn grid(&self) -> &Grid {
        match self {
            CellSpace::Site(g) | CellSpace::Bond(g) => g,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            CellSpace::Site(g) => g.len,
            CellSpace::Bond(g) => g.len * g.dim,
        }
    }

    /// Cells that may never be used: the padding ring, plus everything
    /// ordered before `root`.
    pub fn blocked_before(&self, root: usize) -> Vec<bool> {
        let mut blocked = vec![false; self.len()];
        match self {
            CellSpace::Site(g) => {
                for (i, b) in blocked.iter_mut().enumerate() {
                    *b = i < root || g.on_border(i);
                }
            }
            CellSpace::Bond(g) => {
                for v in 0..g.len {
                    let border = g.on_border(v);
                    for axis in 0..g.dim {
                        let cell = v * g.dim + axis;
                        let high_border = !border && g.on_border(v + g.strides[axis]);
                        blocked[cell] = cell < root || border || high_border;
                    }
                }
            }
        }
        blocked
    }

    pub fn neighbors(&self, cell: usize, out: &mut Vec<usize>) {
        out.clear();
        match self {
            CellSpace::Site(g) => {
                for &s in &g.strides {
                    out.push(cell + s);
                    out.push(cell - s);
                }
            }
            CellSpace::Bond(g) => {
                let d = g.dim;
                let (v, axis) = (cell / d, cell % d);
                for u in [v, v + g.strides[axis]] {
                    for (k, &s) in g.strides.iter().enumerate() {
                        let up = u * d + k;
                        let down = (u - s) * d + k;
                        if up != cell {
                            out.push(up);
                        }
                        if down != cell {
                            out.push(down);
                        }
                    }
                }
            }
        }
    }

    /// Endpoints of a bond cell as vertex indices.
    pub fn endpoints(&self, cell: usize) -> (usize, usize) {
        match self {
            CellSpace::Bond(g) => {
                let (v, axis) = (cell / g.dim, cell % g.dim);
                (v, v + g.strides[axis])
            }
            CellSpace::Site(_) => unreachable!("site cells have no endpoints"),
        }
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        Vertex::from(self.grid().coords(idx))
    }

    pub fn edge(&self, cell: usize) -> UndirectedEdge {
        let g = self.grid();
        UndirectedEdge::from_low(self.vertex(cell / g.dim), cell % g.dim)
    }
}
