//! Growth-rate and threshold bounds: the function `f(r)`, the odds
//! transform, translation between thresholds and growth rates, the
//! Eden-based improvement `g_d(x)`, and the registry of `1/d` expansions.

mod expansion;
mod format;
mod growth;
mod improved;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use expansion::{evaluate_expansion, expansion, expansions, ExpansionSpec, Series, Variable};
pub use format::{conservative_decimal, significant};
pub use growth::{
    b_upper_crude, f, f_inverse, growth_lower_from_pc_upper, kesten_certificate,
    kesten_growth_upper, p_of_r, pc_lower_from_growth_upper, r_of_p, KestenTerm,
};
pub use improved::{
    g_d, improved_check, improved_upper_bound, thm_pc_lower, thm_pc_lower_formula,
    ImprovedBound, DEFAULT_C,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// How much a number can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rigor {
    Rigorous,
    /// Reported from non-rigorous series analysis.
    PhysicsReported,
    MonteCarlo,
    /// Valid whenever the user-supplied input is itself a valid bound.
    Conditional,
}

impl fmt::Display for Rigor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rigor::Rigorous => "rigorous",
            Rigor::PhysicsReported => "physics-reported",
            Rigor::MonteCarlo => "monte-carlo",
            Rigor::Conditional => "conditional",
        })
    }
}

impl Rigor {
    /// The weaker of two rigor levels, for chained derivations.
    pub fn meet(self, other: Rigor) -> Rigor {
        use Rigor::*;
        match (self, other) {
            (PhysicsReported, _) | (_, PhysicsReported) => PhysicsReported,
            (MonteCarlo, _) | (_, MonteCarlo) => MonteCarlo,
            (Conditional, _) | (_, Conditional) => Conditional,
            _ => Rigorous,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Site,
    Bond,
}

impl std::str::FromStr for Flavor {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "site" => Ok(Flavor::Site),
            "bond" => Ok(Flavor::Bond),
            other => Err(crate::error::invalid("flavor", format!("`{other}` is not site|bond"))),
        }
    }
}

/// Growth-rate symbols: `a` animals, `b` interfaces, `t` trees; the `_dot`
/// forms are the site versions and `_r` the ratio-restricted ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrowthQuantity {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "a_dot")]
    ADot,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "b_dot")]
    BDot,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "b_r")]
    BR,
    #[serde(rename = "a_dot_r")]
    ADotR,
}

impl GrowthQuantity {
    pub fn symbol(self) -> &'static str {
        match self {
            GrowthQuantity::A => "a",
            GrowthQuantity::ADot => "a_dot",
            GrowthQuantity::B => "b",
            GrowthQuantity::BDot => "b_dot",
            GrowthQuantity::T => "t",
            GrowthQuantity::BR => "b_r",
            GrowthQuantity::ADotR => "a_dot_r",
        }
    }

    /// The animal growth rate dual to a threshold of the given flavor.
    pub fn for_flavor(flavor: Flavor) -> Self {
        match flavor {
            Flavor::Site => GrowthQuantity::ADot,
            Flavor::Bond => GrowthQuantity::A,
        }
    }
}

/// A bound on an exponential growth rate. `dim` is `None` for lattices
/// other than `Z^d` that only enter as a number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthBound {
    pub quantity: GrowthQuantity,
    #[serde(rename = "d")]
    pub dim: Option<usize>,
    pub value: f64,
    pub direction: Direction,
    pub rigor: Rigor,
    pub provenance: Vec<String>,
}

/// A bound on a percolation threshold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdBound {
    pub flavor: Flavor,
    #[serde(rename = "d")]
    pub dim: Option<usize>,
    pub value: f64,
    pub direction: Direction,
    pub rigor: Rigor,
    pub provenance: Vec<String>,
}

impl GrowthBound {
    pub fn input(quantity: GrowthQuantity, dim: Option<usize>, value: f64, direction: Direction) -> Self {
        GrowthBound {
            quantity,
            dim,
            value,
            direction,
            rigor: Rigor::Conditional,
            provenance: vec![format!("input:{}={value}", quantity.symbol())],
        }
    }
}

impl ThresholdBound {
    pub fn input(flavor: Flavor, dim: Option<usize>, value: f64, direction: Direction) -> Self {
        ThresholdBound {
            flavor,
            dim,
            value,
            direction,
            rigor: Rigor::Conditional,
            provenance: vec![format!("input:{}={value}", threshold_symbol(flavor))],
        }
    }
}

pub fn threshold_symbol(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Bond => "p_c",
        Flavor::Site => "p_c_dot",
    }
}

/// The serialized form shared by growth and threshold bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub quantity: String,
    pub d: Option<usize>,
    pub value: f64,
    pub direction: Direction,
    pub rigor: Rigor,
    pub provenance: Vec<String>,
    /// `value` rounded toward the safe side at the requested decimals.
    pub conservative: String,
}

impl BoundReport {
    pub fn from_growth(b: &GrowthBound, decimals: u32) -> Self {
        BoundReport {
            quantity: b.quantity.symbol().to_string(),
            d: b.dim,
            value: b.value,
            direction: b.direction,
            rigor: b.rigor,
            provenance: b.provenance.clone(),
            conservative: conservative_decimal(b.value, decimals, b.direction),
        }
    }

    pub fn from_threshold(b: &ThresholdBound, decimals: u32) -> Self {
        BoundReport {
            quantity: threshold_symbol(b.flavor).to_string(),
            d: b.dim,
            value: b.value,
            direction: b.direction,
            rigor: b.rigor,
            provenance: b.provenance.clone(),
            conservative: conservative_decimal(b.value, decimals, b.direction),
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.direction {
            Direction::Upper => "<=",
            Direction::Lower => ">=",
        };
        let lattice = match self.d {
            Some(d) => format!("Z^{d}"),
            None => "G".to_string(),
        };
        write!(
            f,
            "{}({lattice}) {rel} {} (value {}, {})",
            self.quantity,
            self.conservative,
            significant(self.value, 12),
            self.rigor,
        )
    }
}
