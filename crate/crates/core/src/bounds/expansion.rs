use std::f64::consts::E;
use std::sync::OnceLock;

use serde::Serialize;

use super::Rigor;
use crate::error::{invalid, Error, Result};

/// The expansion variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variable {
    /// `2d`
    TwoD,
    /// `sigma = 2d - 1`
    Sigma,
}

impl Variable {
    pub fn at(self, dim: usize) -> f64 {
        match self {
            Variable::TwoD => (2 * dim) as f64,
            Variable::Sigma => (2 * dim - 1) as f64,
        }
    }
}

/// Terms are `(k, c)` pairs meaning `c v^k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "form", content = "terms", rename_all = "kebab-case")]
pub enum Series {
    /// `sum c v^k`
    Power(Vec<(i32, f64)>),
    /// `v e exp(sum c v^k)`
    ScaledExp(Vec<(i32, f64)>),
}

/// A truncated asymptotic expansion. The error term is metadata only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpansionSpec {
    pub name: &'static str,
    /// The quantity being expanded.
    pub target: &'static str,
    pub variable: Variable,
    pub series: Series,
    pub error_order: &'static str,
    pub rigor: Rigor,
}

fn registry() -> &'static [ExpansionSpec] {
    static REGISTRY: OnceLock<Vec<ExpansionSpec>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        vec![
            ExpansionSpec {
                name: "bond-threshold",
                target: "p_c",
                variable: Variable::TwoD,
                series: Series::Power(vec![(-1, 1.0), (-2, 1.0), (-3, 3.5)]),
                error_order: "O(1/d^4)",
                rigor: Rigor::Rigorous,
            },
            ExpansionSpec {
                name: "site-threshold",
                target: "p_c_dot",
                variable: Variable::TwoD,
                series: Series::Power(vec![(-1, 1.0), (-2, 2.5), (-3, 7.75)]),
                error_order: "O(1/d^4)",
                rigor: Rigor::Rigorous,
            },
            ExpansionSpec {
                name: "site-threshold-series",
                target: "p_c_dot",
                variable: Variable::Sigma,
                series: Series::Power(vec![(-1, 1.0), (-2, 1.5), (-3, 3.75), (-4, 20.75)]),
                error_order: "O(1/sigma^5)",
                rigor: Rigor::PhysicsReported,
            },
            ExpansionSpec {
                name: "tree-growth",
                target: "t",
                variable: Variable::Sigma,
                series: Series::ScaledExp(vec![
                    (-1, -0.5),
                    (-2, -8.0 / 3.0),
                    (-3, -85.0 / 12.0),
                    (-4, -931.0 / 20.0),
                    (-5, -2777.0 / 10.0),
                ]),
                error_order: "O(1/sigma^6) inside exp",
                rigor: Rigor::PhysicsReported,
            },
            ExpansionSpec {
                name: "animal-growth",
                target: "a",
                variable: Variable::Sigma,
                series: Series::ScaledExp(vec![
                    (-1, -0.5),
                    (-2, -(8.0 / 3.0 - 1.0 / (2.0 * E))),
                    (-3, -(85.0 / 12.0 - 1.0 / (4.0 * E))),
                    (-4, -(931.0 / 20.0 - 139.0 / (48.0 * E) - 1.0 / (8.0 * E * E))),
                    (-5, -(2777.0 / 10.0 + 177.0 / (32.0 * E) - 29.0 / (12.0 * E * E))),
                ]),
                error_order: "O(1/sigma^6) inside exp",
                rigor: Rigor::PhysicsReported,
            },
            ExpansionSpec {
                name: "interface-growth",
                target: "b",
                variable: Variable::TwoD,
                series: Series::Power(vec![(1, E), (0, -1.5 * E)]),
                error_order: "O(1/d)",
                rigor: Rigor::Rigorous,
            },
            ExpansionSpec {
                name: "site-animal-growth",
                target: "a_dot",
                variable: Variable::TwoD,
                series: Series::Power(vec![(1, E), (0, -3.0 * E)]),
                error_order: "O(1/d)",
                // only the lower half is proven; equality is conjectured
                rigor: Rigor::PhysicsReported,
            },
        ]
    })
}

pub fn expansions() -> &'static [ExpansionSpec] {
    registry()
}

pub fn expansion(name: &str) -> Result<&'static ExpansionSpec> {
    registry()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownExpansion {
            name: name.to_string(),
            known: registry().iter().map(|s| s.name).collect::<Vec<_>>().join(", "),
        })
}

/// The finite partial sum at dimension `dim`.
pub fn evaluate_expansion(spec: &ExpansionSpec, dim: usize) -> Result<f64> {
    if dim < 2 {
        return Err(invalid("d", "expansions need d >= 2"));
    }
    let v = spec.variable.at(dim);
    let sum = |terms: &[(i32, f64)]| terms.iter().map(|&(k, c)| c * v.powi(k)).sum::<f64>();
    Ok(match &spec.series {
        Series::Power(terms) => sum(terms),
        Series::ScaledExp(terms) => v * E * sum(terms).exp(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{f, growth_lower_from_pc_upper, Direction, Flavor, ThresholdBound};

    #[test]
    fn registry_is_complete() {
        assert_eq!(expansions().len(), 7);
        let names: std::collections::HashSet<_> = expansions().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), 7);
        match expansion("nope") {
            Err(Error::UnknownExpansion { known, .. }) => assert!(known.contains("bond-threshold")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bond_threshold_d3() {
        let v = evaluate_expansion(expansion("bond-threshold").unwrap(), 3).unwrap();
        let want = 1.0 / 6.0 + 1.0 / 36.0 + 7.0 / 432.0;
        assert!((v - want).abs() < 1e-15);
        assert!((v - 0.21065).abs() < 1e-5);
    }

    #[test]
    fn tree_and_animal_agree_at_leading_orders() {
        for d in [5, 10, 50] {
            let t = evaluate_expansion(expansion("tree-growth").unwrap(), d).unwrap();
            let a = evaluate_expansion(expansion("animal-growth").unwrap(), d).unwrap();
            assert!(a > t, "animals dominate trees at d={d}");
            assert!((a - t) / t < 0.05);
        }
    }

    #[test]
    fn crude_bound_minus_interface_form() {
        // (f(2d-2) - (2de - 3e/2)) d stays bounded (it tends to -e/48)
        for d in 10..=10_000 {
            let form = evaluate_expansion(expansion("interface-growth").unwrap(), d).unwrap();
            let v = (f((2 * d - 2) as f64).unwrap() - form) * d as f64;
            assert!(v.abs() <= 1.0, "d={d}: {v}");
        }
    }

    #[test]
    fn site_threshold_chain_gap() {
        // f(r(p)) at the rigorous site-threshold partial sum sits 2de - 3e + O(1/d)
        for d in 10..=10_000 {
            let p = evaluate_expansion(expansion("site-threshold").unwrap(), d).unwrap();
            let g = growth_lower_from_pc_upper(&ThresholdBound::input(
                Flavor::Site,
                Some(d),
                p,
                Direction::Upper,
            ))
            .unwrap()
            .value;
            let form = evaluate_expansion(expansion("site-animal-growth").unwrap(), d).unwrap();
            let v = (g - form) * d as f64;
            assert!(v.abs() <= 10.0, "d={d}: {v}");
        }
    }
}
