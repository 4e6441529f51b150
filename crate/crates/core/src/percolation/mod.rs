//! Monte Carlo Bernoulli percolation on finite boxes `{0..L-1}^d`.
//!
//! Every cell (vertex for site percolation, edge `v*d + axis` for bond) gets
//! the uniform at word position `2 * cell` of a ChaCha8 stream keyed by
//! `(seed, trial)`, and is open iff that uniform is below `p`. Runs with the
//! same seed are therefore coupled across `p` and independent of threading.

mod union_find;

use std::collections::{HashMap, VecDeque};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::Flavor;
use crate::error::{invalid, Error, Result};

pub use union_find::UnionFind;

/// Largest box, in vertices.
pub const MAX_CELLS: u64 = 1 << 26;

/// Bisection steps used by [`estimate_threshold`].
pub const THRESHOLD_STEPS: usize = 12;

const Z95: f64 = 1.96;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PercConfig {
    #[serde(rename = "d")]
    pub dim: usize,
    #[serde(rename = "L")]
    pub side: usize,
    pub flavor: Flavor,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; 0 uses the ambient rayon pool. Results do not depend
    /// on it.
    #[serde(skip)]
    pub threads: usize,
}

impl PercConfig {
    pub fn new(dim: usize, side: usize, flavor: Flavor, p: f64, trials: u64, seed: u64) -> Self {
        PercConfig {
            dim,
            side,
            flavor,
            p,
            trials,
            seed,
            threads: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(invalid("d", "dimension must be positive"));
        }
        if self.side < 2 {
            return Err(invalid("L", "box side must be at least 2"));
        }
        if self.trials == 0 {
            return Err(invalid("trials", "need at least one trial"));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(invalid("p", format!("need 0 <= p <= 1, got {}", self.p)));
        }
        let cells = (self.side as u128).checked_pow(self.dim as u32).unwrap_or(u128::MAX);
        if cells > MAX_CELLS as u128 {
            return Err(Error::BoxTooLarge {
                cells,
                cap: MAX_CELLS,
            });
        }
        Ok(())
    }

    fn at(&self, p: f64) -> PercConfig {
        PercConfig { p, ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PercQuantity {
    CrossingProbability,
    Threshold,
    TailMass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PercEstimate {
    pub quantity: PercQuantity,
    pub value: f64,
    /// Half-width of a normal-approximation 95% interval.
    pub half_width: f64,
    /// Cluster size for tail estimates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub config: PercConfig,
}

/// Mixed-radix box with axis 0 most significant.
struct Boxed {
    dim: usize,
    side: usize,
    strides: Vec<usize>,
    len: usize,
}

impl Boxed {
    fn new(dim: usize, side: usize) -> Self {
        let mut strides = vec![1; dim];
        for k in (0..dim.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * side;
        }
        Boxed {
            dim,
            side,
            len: strides[0] * side,
            strides,
        }
    }

    fn coord(&self, v: usize, axis: usize) -> usize {
        (v / self.strides[axis]) % self.side
    }

    fn center(&self) -> usize {
        self.strides.iter().map(|s| s * (self.side / 2)).sum()
    }

    fn cells(&self, flavor: Flavor) -> usize {
        match flavor {
            Flavor::Site => self.len,
            Flavor::Bond => self.len * self.dim,
        }
    }
}

fn stream(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn uniform(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Open/closed state of every cell in one trial.
pub fn sample_cells(cfg: &PercConfig, trial: u64) -> Result<Vec<bool>> {
    cfg.validate()?;
    let b = Boxed::new(cfg.dim, cfg.side);
    Ok(sample(&b, cfg, trial))
}

fn sample(b: &Boxed, cfg: &PercConfig, trial: u64) -> Vec<bool> {
    let mut rng = stream(cfg.seed, trial);
    (0..b.cells(cfg.flavor))
        .map(|_| uniform(rng.next_u64()) < cfg.p)
        .collect()
}

/// Lazily evaluated cells of one trial, for explorations that touch few
/// cells.
struct LazyCells {
    rng: ChaCha8Rng,
    p: f64,
    cache: HashMap<usize, bool>,
}

impl LazyCells {
    fn new(cfg: &PercConfig, trial: u64) -> Self {
        LazyCells {
            rng: stream(cfg.seed, trial),
            p: cfg.p,
            cache: HashMap::new(),
        }
    }

    fn open(&mut self, cell: usize) -> bool {
        if let Some(&s) = self.cache.get(&cell) {
            return s;
        }
        self.rng.set_word_pos(2 * cell as u128);
        let s = uniform(self.rng.next_u64()) < self.p;
        self.cache.insert(cell, s);
        s
    }
}

/// Union-find clustering of one configuration. With `faces`, vertices
/// `len` and `len+1` are joined to the faces `x_0 = 0` and `x_0 = L-1`.
fn cluster(b: &Boxed, flavor: Flavor, open: &[bool], faces: bool) -> UnionFind {
    let (top, bottom) = (b.len, b.len + 1);
    let mut uf = UnionFind::new(b.len + 2);
    let present = |v: usize| flavor == Flavor::Bond || open[v];
    for v in 0..b.len {
        if !present(v) {
            continue;
        }
        match b.coord(v, 0) {
            _ if !faces => {}
            0 => {
                uf.union(v, top);
            }
            c if c == b.side - 1 => {
                uf.union(v, bottom);
            }
            _ => {}
        }
        for axis in 0..b.dim {
            if b.coord(v, axis) + 1 == b.side {
                continue;
            }
            let w = v + b.strides[axis];
            let joined = match flavor {
                Flavor::Site => open[w],
                Flavor::Bond => open[v * b.dim + axis],
            };
            if joined {
                uf.union(v, w);
            }
        }
    }
    uf
}

/// Cluster labels (union-find roots) of every vertex in one configuration;
/// closed sites get `None`.
pub fn cluster_labels(cfg: &PercConfig, open: &[bool]) -> Result<Vec<Option<usize>>> {
    cfg.validate()?;
    let b = Boxed::new(cfg.dim, cfg.side);
    if open.len() != b.cells(cfg.flavor) {
        return Err(invalid("open", "configuration length does not match the box"));
    }
    let mut uf = cluster(&b, cfg.flavor, open, false);
    Ok((0..b.len)
        .map(|v| (cfg.flavor == Flavor::Bond || open[v]).then(|| uf.find(v)))
        .collect())
}

fn crosses(b: &Boxed, cfg: &PercConfig, trial: u64) -> bool {
    let open = sample(b, cfg, trial);
    let mut uf = cluster(b, cfg.flavor, &open, true);
    uf.connected(b.len, b.len + 1)
}

fn in_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| invalid("threads", e.to_string()))?;
    Ok(pool.install(job))
}

fn proportion_half_width(value: f64, trials: u64) -> f64 {
    Z95 * (value * (1.0 - value) / trials as f64).sqrt()
}

fn crossing_count(b: &Boxed, cfg: &PercConfig) -> u64 {
    (0..cfg.trials)
        .into_par_iter()
        .map(|t| crosses(b, cfg, t) as u64)
        .sum()
}

/// Fraction of trials with an open path from face `x_0 = 0` to `x_0 = L-1`.
pub fn crossing_probability(cfg: &PercConfig) -> Result<PercEstimate> {
    cfg.validate()?;
    let b = Boxed::new(cfg.dim, cfg.side);
    let hits = in_pool(cfg.threads, || crossing_count(&b, cfg))?;
    let value = hits as f64 / cfg.trials as f64;
    Ok(PercEstimate {
        quantity: PercQuantity::CrossingProbability,
        value,
        half_width: proportion_half_width(value, cfg.trials),
        n: None,
        config: cfg.clone(),
    })
}

/// Bisection for the `p` where the crossing probability is one half.
///
/// `cfg.p` is ignored; the reported config carries the final estimate. The
/// half-width combines the last bracket with binomial noise at one half
/// divided by a finite-difference slope at `p +- 0.02`.
pub fn estimate_threshold(cfg: &PercConfig) -> Result<PercEstimate> {
    let base = cfg.at(0.5);
    base.validate()?;
    let b = Boxed::new(cfg.dim, cfg.side);
    let trials = cfg.trials as f64;
    let (estimate, slope) = in_pool(cfg.threads, || {
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..THRESHOLD_STEPS {
            let mid = 0.5 * (lo + hi);
            let frac = crossing_count(&b, &base.at(mid)) as f64 / trials;
            if frac >= 0.5 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let est = 0.5 * (lo + hi);
        let (pl, ph) = ((est - 0.02).max(0.0), (est + 0.02).min(1.0));
        let fl = crossing_count(&b, &base.at(pl)) as f64 / trials;
        let fh = crossing_count(&b, &base.at(ph)) as f64 / trials;
        (est, (fh - fl) / (ph - pl))
    })?;
    let bracket = 0.5f64.powi(THRESHOLD_STEPS as i32 + 1);
    let noise_prob = Z95 * (0.25 / trials).sqrt();
    let noise = if slope > 0.0 {
        (noise_prob / slope).min(0.5)
    } else {
        0.5
    };
    Ok(PercEstimate {
        quantity: PercQuantity::Threshold,
        value: estimate,
        half_width: (bracket * bracket + noise * noise).sqrt(),
        n: None,
        config: base.at(estimate),
    })
}

/// Size of the open cluster of the central vertex, explored up to `cap`.
fn origin_cluster(b: &Boxed, cfg: &PercConfig, trial: u64, cap: usize) -> usize {
    let mut cells = LazyCells::new(cfg, trial);
    let o = b.center();
    if cfg.flavor == Flavor::Site && !cells.open(o) {
        return 0;
    }
    let mut seen = HashMap::from([(o, ())]);
    let mut queue = VecDeque::from([o]);
    while let Some(v) = queue.pop_front() {
        if seen.len() >= cap {
            break;
        }
        for axis in 0..b.dim {
            let c = b.coord(v, axis);
            for (w, edge) in [
                (c + 1 < b.side).then(|| (v + b.strides[axis], v * b.dim + axis)),
                (c > 0).then(|| {
                    let w = v - b.strides[axis];
                    (w, w * b.dim + axis)
                }),
            ]
            .into_iter()
            .flatten()
            {
                if seen.contains_key(&w) {
                    continue;
                }
                let joined = match cfg.flavor {
                    Flavor::Site => cells.open(w),
                    Flavor::Bond => cells.open(edge),
                };
                if joined {
                    seen.insert(w, ());
                    queue.push_back(w);
                }
            }
        }
    }
    seen.len().min(cap)
}

/// `P(|C_o| >= n)` for `n = 1..=n_max`, from one set of trials.
pub fn cluster_tail_curve(cfg: &PercConfig, n_max: usize) -> Result<Vec<PercEstimate>> {
    cfg.validate()?;
    if n_max == 0 {
        return Err(invalid("n", "cluster size must be positive"));
    }
    let b = Boxed::new(cfg.dim, cfg.side);
    let sizes: Vec<usize> = in_pool(cfg.threads, || {
        (0..cfg.trials)
            .into_par_iter()
            .map(|t| origin_cluster(&b, cfg, t, n_max))
            .collect()
    })?;
    let mut at_least = vec![0u64; n_max + 2];
    for s in sizes {
        at_least[s] += 1;
    }
    for n in (0..=n_max).rev() {
        at_least[n] += at_least[n + 1];
    }
    Ok((1..=n_max)
        .map(|n| {
            let value = at_least[n] as f64 / cfg.trials as f64;
            PercEstimate {
                quantity: PercQuantity::TailMass,
                value,
                half_width: proportion_half_width(value, cfg.trials),
                n: Some(n),
                config: cfg.clone(),
            }
        })
        .collect())
}

/// `P(|C_o| >= n)` for the central vertex.
pub fn cluster_tail(cfg: &PercConfig, n: usize) -> Result<PercEstimate> {
    let mut curve = cluster_tail_curve(cfg, n)?;
    Ok(curve.pop().expect("n >= 1"))
}

#[cfg(test)]
mod tests;
