use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

use super::grid::CellSpace;
use super::redelmeier::{Budget, Constraint, Engine, Tally};
use super::{AnimalKind, LatticeAnimal, Rooting};

/// Largest cell array the search will allocate.
const MAX_CELLS: usize = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    /// Abort after visiting this many search nodes.
    pub node_budget: Option<u64>,
    /// Worker threads; 0 uses the ambient rayon pool, 1 runs serially.
    pub threads: usize,
    /// Depth at which the search tree is cut into parallel work units.
    pub split_depth: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            node_budget: None,
            threads: 0,
            split_depth: 4,
        }
    }
}

impl EnumConfig {
    pub fn serial() -> Self {
        EnumConfig {
            threads: 1,
            ..Self::default()
        }
    }
}

/// Exact counts for sizes `1..=n_max`, in both rooting conventions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub dim: usize,
    pub kind: AnimalKind,
    pub n_max: usize,
    pub lexmin: Vec<BigUint>,
    pub origin: Vec<BigUint>,
    /// Set when the node budget ran out; counts are then lower bounds.
    pub partial: bool,
    pub nodes: u64,
}

impl CountResult {
    pub fn counts(&self, rooting: Rooting) -> Counts {
        Counts {
            values: match rooting {
                Rooting::Lexmin => self.lexmin.clone(),
                Rooting::Origin => self.origin.clone(),
            },
            partial: self.partial,
        }
    }
}

/// Counts indexed by size: `values[n - 1]` is the count at size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub values: Vec<BigUint>,
    pub partial: bool,
}

impl Counts {
    pub fn at(&self, n: usize) -> &BigUint {
        &self.values[n - 1]
    }
}

fn validate(dim: usize, n_max: usize, kind: AnimalKind) -> Result<CellSpace> {
    if dim == 0 {
        return Err(invalid("d", "dimension must be at least 1"));
    }
    if n_max == 0 {
        return Err(invalid("n-max", "must be at least 1"));
    }
    if kind == AnimalKind::Interface2d && dim != 2 {
        return Err(invalid("d", "interface2d counting needs d = 2"));
    }
    let radius = n_max as f64 + 1.0;
    let cells = (2.0 * radius + 1.0).powi(dim as i32) * dim as f64;
    if cells > MAX_CELLS as f64 {
        return Err(invalid(
            "n-max",
            format!("search box for d={dim}, n={n_max} exceeds {MAX_CELLS} cells"),
        ));
    }
    Ok(if kind.is_site() {
        CellSpace::for_site(dim, n_max)
    } else {
        CellSpace::for_bond(dim, n_max)
    })
}

fn constraint(kind: AnimalKind) -> Constraint {
    match kind {
        AnimalKind::Site | AnimalKind::Bond => Constraint::None,
        AnimalKind::Tree => Constraint::Acyclic,
        AnimalKind::Interface2d => Constraint::Interface2d,
    }
}

/// Roots of the search: the origin cell, or every edge leaving the origin
/// in a positive direction.
fn roots(space: &CellSpace) -> Vec<usize> {
    match space {
        CellSpace::Site(g) => vec![g.origin()],
        CellSpace::Bond(g) => (0..g.dim).map(|axis| g.origin() * g.dim + axis).collect(),
    }
}

/// Counts all animals of `kind` with sizes `1..=n_max`.
pub fn count_animals(
    dim: usize,
    n_max: usize,
    kind: AnimalKind,
    cfg: &EnumConfig,
) -> Result<CountResult> {
    let space = validate(dim, n_max, kind)?;
    let budget = Budget::new(cfg.node_budget);
    let split = cfg.split_depth.min(n_max.saturating_sub(1));
    let constraint = constraint(kind);

    let mut total = Tally::new(n_max);
    for root in roots(&space) {
        let blocked = space.blocked_before(root);
        if cfg.threads == 1 || split == 0 {
            let mut engine = Engine::new(&space, n_max, constraint, &budget);
            engine.run_root(root, &blocked);
            total.absorb(&engine.tally);
            continue;
        }
        let mut head = Engine::new(&space, n_max, constraint, &budget).with_split(split);
        head.run_root(root, &blocked);
        total.absorb(&head.tally);
        let units = std::mem::take(&mut head.units);
        let work = || {
            units
                .into_par_iter()
                .map(|unit| {
                    let mut engine = Engine::new(&space, n_max, constraint, &budget);
                    engine.run_unit(unit, &blocked);
                    engine.tally
                })
                .collect::<Vec<Tally>>()
        };
        let tallies = if cfg.threads == 0 {
            work()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| invalid("threads", e.to_string()))?
                .install(work)
        };
        for t in &tallies {
            total.absorb(t);
        }
    }

    Ok(CountResult {
        dim,
        kind,
        n_max,
        lexmin: total.classes.iter().map(|&c| BigUint::from(c)).collect(),
        origin: total.rooted.iter().map(|&c| BigUint::from(c)).collect(),
        partial: budget.exceeded(),
        nodes: budget.used(),
    })
}

pub fn count_site_animals(
    dim: usize,
    n_max: usize,
    rooting: Rooting,
    cfg: &EnumConfig,
) -> Result<Counts> {
    Ok(count_animals(dim, n_max, AnimalKind::Site, cfg)?.counts(rooting))
}

pub fn count_bond_animals(
    dim: usize,
    n_max: usize,
    rooting: Rooting,
    cfg: &EnumConfig,
) -> Result<Counts> {
    Ok(count_animals(dim, n_max, AnimalKind::Bond, cfg)?.counts(rooting))
}

pub fn count_lattice_trees(
    dim: usize,
    n_max: usize,
    rooting: Rooting,
    cfg: &EnumConfig,
) -> Result<Counts> {
    Ok(count_animals(dim, n_max, AnimalKind::Tree, cfg)?.counts(rooting))
}

pub fn count_interfaces_2d(n_max: usize, rooting: Rooting, cfg: &EnumConfig) -> Result<Counts> {
    Ok(count_animals(2, n_max, AnimalKind::Interface2d, cfg)?.counts(rooting))
}

/// Visits every lexmin-rooted animal of `kind` with size `1..=n_max`,
/// serially and in search order. Returns whether the budget ran out.
pub fn for_each_animal<F>(
    dim: usize,
    n_max: usize,
    kind: AnimalKind,
    cfg: &EnumConfig,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&LatticeAnimal),
{
    let space = validate(dim, n_max, kind)?;
    let budget = Budget::new(cfg.node_budget);
    let mut on_cells = |cells: &[usize]| {
        let animal = if kind.is_site() {
            let mut vs: Vec<_> = cells.iter().map(|&c| space.vertex(c)).collect();
            vs.sort();
            LatticeAnimal {
                dim,
                kind,
                cells: vs,
                edges: Vec::new(),
            }
        } else {
            let mut es: Vec<_> = cells.iter().map(|&c| space.edge(c)).collect();
            es.sort();
            LatticeAnimal {
                dim,
                kind,
                cells: Vec::new(),
                edges: es,
            }
        };
        visit(&animal);
    };
    for root in roots(&space) {
        let blocked = space.blocked_before(root);
        let mut engine = Engine::new(&space, n_max, constraint(kind), &budget).with_visitor(&mut on_cells);
        engine.run_root(root, &blocked);
    }
    Ok(budget.exceeded())
}
