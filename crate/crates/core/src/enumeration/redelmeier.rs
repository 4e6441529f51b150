//! Redelmeier's untried-set search over a [`CellSpace`].

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::grid::CellSpace;
use super::interface::{all_edges_outside, PlanarEdge};

/// Hereditary filters: once a set fails, every connected superset fails,
/// so a rejected cell can be dropped from the whole branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Constraint {
    None,
    Acyclic,
    Interface2d,
}

/// Shared node budget. Workers flush their local counts in batches.
pub(crate) struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
    exceeded: AtomicBool,
}

const FLUSH: u64 = 1 << 12;

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            exceeded: AtomicBool::new(false),
        }
    }

    fn charge(&self, nodes: u64) -> bool {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if let Some(limit) = self.limit {
            if total > limit {
                self.exceeded.store(true, Ordering::Relaxed);
            }
        }
        !self.exceeded()
    }

    pub fn exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

/// Per-size tallies. Index `k` holds animals with `k + 1` cells.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    /// One per translation class.
    pub classes: Vec<u64>,
    /// Sum of vertex counts, i.e. translates containing the origin.
    pub rooted: Vec<u64>,
}

impl Tally {
    pub fn new(max_size: usize) -> Self {
        Tally {
            classes: vec![0; max_size],
            rooted: vec![0; max_size],
        }
    }

    pub fn absorb(&mut self, other: &Tally) {
        for (a, b) in self.classes.iter_mut().zip(&other.classes) {
            *a += b;
        }
        for (a, b) in self.rooted.iter_mut().zip(&other.rooted) {
            *a += b;
        }
    }
}

/// A subtree of the search, detached at a fixed depth.
/// Only the cells marked on top of the root's blocked set are stored; the
/// worker rebuilds the rest.
pub(crate) struct WorkUnit {
    pub root: usize,
    marked: Vec<usize>,
    cells: Vec<usize>,
    untried: Vec<usize>,
}

pub(crate) struct Engine<'a> {
    space: &'a CellSpace,
    max_size: usize,
    constraint: Constraint,
    reached: Vec<bool>,
    marked: Vec<usize>,
    root: usize,
    cells: Vec<usize>,
    vertex_mult: Vec<u8>,
    vertex_count: usize,
    pub tally: Tally,
    budget: &'a Budget,
    pending: u64,
    split_depth: Option<usize>,
    pub units: Vec<WorkUnit>,
    visitor: Option<&'a mut dyn FnMut(&[usize])>,
    scratch: Vec<Vec<usize>>,
}

impl<'a> Engine<'a> {
    pub fn new(
        space: &'a CellSpace,
        max_size: usize,
        constraint: Constraint,
        budget: &'a Budget,
    ) -> Self {
        let vertex_mult = match space {
            CellSpace::Bond(g) => vec![0; g.len],
            CellSpace::Site(_) => Vec::new(),
        };
        Engine {
            space,
            max_size,
            constraint,
            reached: Vec::new(),
            marked: Vec::new(),
            root: 0,
            cells: Vec::with_capacity(max_size),
            vertex_mult,
            vertex_count: 0,
            tally: Tally::new(max_size),
            budget,
            pending: 0,
            split_depth: None,
            units: Vec::new(),
            visitor: None,
            scratch: vec![Vec::new(); max_size + 1],
        }
    }

    pub fn with_split(mut self, depth: usize) -> Self {
        self.split_depth = Some(depth);
        self
    }

    pub fn with_visitor(mut self, visitor: &'a mut dyn FnMut(&[usize])) -> Self {
        self.visitor = Some(visitor);
        self
    }

    /// Searches every animal whose smallest cell is `root`; `blocked` must
    /// be `space.blocked_before(root)`.
    pub fn run_root(&mut self, root: usize, blocked: &[bool]) {
        self.reached = blocked.to_vec();
        self.root = root;
        if self.reached[root] {
            return;
        }
        self.mark(root);
        self.extend(vec![root]);
        self.flush();
    }

    pub fn run_unit(&mut self, unit: WorkUnit, blocked: &[bool]) {
        self.reached = blocked.to_vec();
        self.root = unit.root;
        for &x in &unit.marked {
            self.mark(x);
        }
        for &c in &unit.cells {
            self.push(c);
        }
        self.extend(unit.untried);
        self.flush();
    }

    fn mark(&mut self, x: usize) {
        self.reached[x] = true;
        self.marked.push(x);
    }

    fn flush(&mut self) {
        if self.pending > 0 {
            self.budget.charge(self.pending);
            self.pending = 0;
        }
    }

    fn admit(&mut self, cell: usize) -> bool {
        match self.constraint {
            Constraint::None => true,
            Constraint::Acyclic => {
                if self.cells.is_empty() {
                    return true;
                }
                let (a, b) = self.space.endpoints(cell);
                !(self.vertex_mult[a] > 0 && self.vertex_mult[b] > 0)
            }
            Constraint::Interface2d => {
                let mut edges: Vec<PlanarEdge> = Vec::with_capacity(self.cells.len() + 1);
                for &c in self.cells.iter().chain(std::iter::once(&cell)) {
                    edges.push(self.planar(c));
                }
                all_edges_outside(&edges)
            }
        }
    }

    fn planar(&self, cell: usize) -> PlanarEdge {
        let g = self.space.grid();
        let c = g.coords(cell / g.dim);
        (c[0], c[1], cell % g.dim)
    }

    fn push(&mut self, cell: usize) {
        self.cells.push(cell);
        if let CellSpace::Bond(_) = self.space {
            let (a, b) = self.space.endpoints(cell);
            for v in [a, b] {
                if self.vertex_mult[v] == 0 {
                    self.vertex_count += 1;
                }
                self.vertex_mult[v] += 1;
            }
        }
    }

    fn pop(&mut self) {
        let cell = self.cells.pop().expect("pop on empty animal");
        if let CellSpace::Bond(_) = self.space {
            let (a, b) = self.space.endpoints(cell);
            for v in [a, b] {
                self.vertex_mult[v] -= 1;
                if self.vertex_mult[v] == 0 {
                    self.vertex_count -= 1;
                }
            }
        }
    }

    fn record(&mut self) {
        let k = self.cells.len() - 1;
        self.tally.classes[k] += 1;
        self.tally.rooted[k] += match self.space {
            CellSpace::Site(_) => self.cells.len() as u64,
            CellSpace::Bond(_) => self.vertex_count as u64,
        };
        if let Some(visit) = self.visitor.as_mut() {
            visit(&self.cells);
        }
        self.pending += 1;
        if self.pending >= FLUSH {
            self.budget.charge(self.pending);
            self.pending = 0;
        }
    }

    fn extend(&mut self, mut untried: Vec<usize>) {
        let depth = self.cells.len();
        let mut nbrs = std::mem::take(&mut self.scratch[depth]);
        while let Some(cell) = untried.pop() {
            if self.budget.exceeded() {
                break;
            }
            if !self.admit(cell) {
                continue;
            }
            self.push(cell);
            self.record();
            if self.cells.len() < self.max_size {
                self.space.neighbors(cell, &mut nbrs);
                let mut next = untried.clone();
                let marked_before = self.marked.len();
                for &x in &nbrs {
                    if !self.reached[x] {
                        self.mark(x);
                        next.push(x);
                    }
                }
                if self.split_depth == Some(self.cells.len()) {
                    self.units.push(WorkUnit {
                        root: self.root,
                        marked: self.marked.clone(),
                        cells: self.cells.clone(),
                        untried: next,
                    });
                } else {
                    self.extend(next);
                }
                for x in self.marked.drain(marked_before..) {
                    self.reached[x] = false;
                }
            }
            self.pop();
        }
        self.scratch[depth] = nbrs;
    }
}
