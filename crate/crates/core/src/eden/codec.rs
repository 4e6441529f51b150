use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumeration::{boundary_stats, for_each_animal, AnimalKind, EnumConfig, LatticeAnimal};
use crate::error::{invalid, Error, Result};
use crate::lattice::{direction_of_rank, direction_rank, Sign, Vertex};

/// Length of the code of an `n`-cell animal in `Z^d`: `(2d-1)n - d + 1`.
pub fn code_length(dim: usize, n: usize) -> usize {
    (2 * dim - 1) * n + 1 - dim
}

/// The binary sequence assigned to a site animal by Eden's procedure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdenCodeWire", into = "EdenCodeWire")]
pub struct EdenCode {
    dim: usize,
    size_n: usize,
    bits: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct EdenCodeWire {
    d: usize,
    n: usize,
    bits: String,
}

impl TryFrom<EdenCodeWire> for EdenCode {
    type Error = Error;
    fn try_from(w: EdenCodeWire) -> Result<Self> {
        EdenCode::from_bit_string(w.d, w.n, &w.bits)
    }
}

impl From<EdenCode> for EdenCodeWire {
    fn from(c: EdenCode) -> Self {
        EdenCodeWire {
            d: c.dim,
            n: c.size_n,
            bits: c.to_string(),
        }
    }
}

impl EdenCode {
    /// Wraps raw bits, checking only the length. Consistency of the ones
    /// count and the schedule is checked by [`eden_decode`].
    pub fn new(dim: usize, size_n: usize, bits: Vec<bool>) -> Result<Self> {
        if dim == 0 || size_n == 0 {
            return Err(invalid("n", "dimension and size must be positive"));
        }
        let want = code_length(dim, size_n);
        if bits.len() != want {
            return Err(invalid(
                "bits",
                format!("length {} but (2d-1)n-d+1 = {want} for d={dim}, n={size_n}", bits.len()),
            ));
        }
        Ok(EdenCode { dim, size_n, bits })
    }

    pub fn from_bit_string(dim: usize, size_n: usize, s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(invalid("bits", format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        EdenCode::new(dim, size_n, bits)
    }

    /// Infers `n` from the string length.
    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("d", "dimension must be positive"));
        }
        let len = s.trim().len();
        let step = 2 * dim - 1;
        if len < dim || !(len + dim - 1).is_multiple_of(step) {
            return Err(invalid("bits", format!("length {len} is not (2d-1)n-d+1 for d={dim}")));
        }
        EdenCode::from_bit_string(dim, (len + dim - 1) / step, s.trim())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size_n(&self) -> usize {
        self.size_n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for EdenCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The spanning tree built while encoding, vertices in revelation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdenTree {
    pub order: Vec<Vertex>,
    /// `parent[k]` is the label of `order[k]`'s parent; `None` for the root.
    pub parent: Vec<Option<usize>>,
    /// Rank of the direction from the parent to this vertex.
    pub arrival: Vec<Option<usize>>,
    pub turn_count: usize,
}

impl EdenTree {
    pub fn root(&self) -> &Vertex {
        &self.order[0]
    }

    fn reveal(&mut self, v: Vertex, parent: usize, rank: usize) {
        if let Some(prev) = self.arrival[parent] {
            if direction_of_rank(prev).0 != direction_of_rank(rank).0 {
                self.turn_count += 1;
            }
        }
        self.order.push(v);
        self.parent.push(Some(parent));
        self.arrival.push(Some(rank));
    }
}

/// Runs the revelation schedule. `probe(bit_index, target, already_revealed)`
/// decides each bit.
fn run_schedule<F>(dim: usize, root: Vertex, mut probe: F) -> Result<(Vec<bool>, EdenTree)>
where
    F: FnMut(usize, &Vertex, bool) -> Result<bool>,
{
    let mut tree = EdenTree {
        order: vec![root.clone()],
        parent: vec![None],
        arrival: vec![None],
        turn_count: 0,
    };
    let mut seen: HashMap<Vertex, usize> = HashMap::from([(root.clone(), 0)]);
    let mut bits = Vec::new();

    // the root only has neighbours in the positive directions
    for axis in 0..dim {
        let w = root.step(axis, Sign::Plus);
        let bit = probe(bits.len(), &w, false)?;
        bits.push(bit);
        if bit {
            seen.insert(w.clone(), tree.order.len());
            tree.reveal(w, 0, direction_rank(axis, Sign::Plus));
        }
    }

    let mut k = 1;
    while k < tree.order.len() {
        let u = tree.order[k].clone();
        let back = tree.arrival[k].expect("non-root has an arrival direction") ^ 1;
        for rank in (0..2 * dim).filter(|&r| r != back) {
            let (axis, sign) = direction_of_rank(rank);
            let w = u.step(axis, sign);
            let bit = probe(bits.len(), &w, seen.contains_key(&w))?;
            bits.push(bit);
            if bit {
                seen.insert(w.clone(), tree.order.len());
                tree.reveal(w, k, rank);
            }
        }
        k += 1;
    }
    Ok((bits, tree))
}

/// Encodes a site animal (translated to lexmin rooting first).
pub fn eden_encode(x: &LatticeAnimal) -> Result<(EdenCode, EdenTree)> {
    if x.kind() != AnimalKind::Site {
        return Err(Error::MalformedAnimal("Eden encoding needs a site animal".into()));
    }
    let x = x.lexmin_rooted();
    let cells: HashSet<&Vertex> = x.cells().iter().collect();
    let (bits, tree) = run_schedule(x.dim(), Vertex::origin(x.dim()), |_, w, revealed| {
        Ok(!revealed && cells.contains(w))
    })?;
    if tree.order.len() != x.size() {
        return Err(Error::MalformedAnimal("animal is not connected".into()));
    }
    let code = EdenCode::new(x.dim(), x.size(), bits)?;
    debug_assert_eq!(code.ones_count(), x.size() - 1);
    Ok((code, tree))
}

/// Replays the schedule; the result re-encodes to exactly `code`.
pub fn eden_decode(code: &EdenCode) -> Result<LatticeAnimal> {
    let dim = code.dim;
    let n = code.size_n;
    let bits = &code.bits;

    let mut ones = 0;
    for (i, &b) in bits.iter().enumerate() {
        if b {
            ones += 1;
            if ones == n {
                return Err(Error::Decode {
                    index: i,
                    reason: format!("more than n-1 = {} ones", n - 1),
                });
            }
        }
    }
    if ones != n - 1 {
        return Err(Error::Decode {
            index: bits.len(),
            reason: format!("{ones} ones but n-1 = {} are required", n - 1),
        });
    }

    let origin = Vertex::origin(dim);
    let (consumed, tree) = run_schedule(dim, origin.clone(), |i, w, revealed| {
        let bit = *bits.get(i).ok_or_else(|| Error::Decode {
            index: i,
            reason: "schedule runs past the end of the code".into(),
        })?;
        if bit && revealed {
            return Err(Error::Decode {
                index: i,
                reason: format!("1-bit points at already revealed vertex {w}"),
            });
        }
        if bit && w < &origin {
            return Err(Error::Decode {
                index: i,
                reason: format!("vertex {w} precedes the root lexicographically"),
            });
        }
        Ok(bit)
    })?;
    if consumed.len() != bits.len() {
        let index = bits[consumed.len()..]
            .iter()
            .position(|&b| b)
            .map_or(consumed.len(), |p| p + consumed.len());
        return Err(Error::Decode {
            index,
            reason: "bits left over after every revealed vertex was processed".into(),
        });
    }

    let animal = LatticeAnimal::site(tree.order)?;
    let (again, _) = eden_encode(&animal)?;
    if let Some(i) = (0..bits.len()).find(|&i| again.bits[i] != bits[i]) {
        return Err(Error::Decode {
            index: i,
            reason: "0-bit points at a vertex that is revealed later".into(),
        });
    }
    Ok(animal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TurnCheck {
    /// `|∂_V X|`
    pub lhs: u64,
    /// `(2d-2)n - t + 2`
    pub rhs: i64,
    pub turns: usize,
    pub holds: bool,
}

/// Both sides of `|∂_V X| <= (2d-2)n - t + 2`, with `t` the Eden tree's turns.
pub fn check_turn_bound(x: &LatticeAnimal) -> Result<TurnCheck> {
    let (_, tree) = eden_encode(x)?;
    let lhs = boundary_stats(x).vertex_boundary;
    let d = x.dim() as i64;
    let rhs = (2 * d - 2) * x.size() as i64 - tree.turn_count as i64 + 2;
    Ok(TurnCheck {
        lhs,
        rhs,
        turns: tree.turn_count,
        holds: lhs as i64 <= rhs,
    })
}

/// The largest turn count over all lexmin-rooted site animals of size `n`.
pub fn max_turns_observed(dim: usize, n: usize, cfg: &EnumConfig) -> Result<usize> {
    let mut best = 0;
    let mut failure = None;
    let partial = for_each_animal(dim, n, AnimalKind::Site, cfg, |x| {
        if x.size() != n || failure.is_some() {
            return;
        }
        match eden_encode(x) {
            Ok((_, tree)) => best = best.max(tree.turn_count),
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    if partial {
        return Err(invalid("node-budget", "enumeration budget exhausted"));
    }
    Ok(best)
}

impl FromStr for EdenCode {
    type Err = Error;
    /// Parses `d:bits`, e.g. `2:10000`.
    fn from_str(s: &str) -> Result<Self> {
        let (d, bits) = s
            .split_once(':')
            .ok_or_else(|| invalid("code", "expected `d:bits`"))?;
        let d: usize = d.trim().parse().map_err(|_| invalid("code", "bad dimension"))?;
        EdenCode::parse(d, bits)
    }
}
