use serde::Serialize;

use super::growth::f;
use super::{Direction, Flavor, Rigor, ThresholdBound};
use crate::error::{invalid, Error, Result};

/// Default constant: `max x^{-x} = e^{1/e}` and `max 1/(y^y (1-y)^{1-y}) = 2`,
/// so 2 covers both.
pub const DEFAULT_C: f64 = 2.0;

fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Upper bound on the growth of site animals with boundary ratio `2d-2-x`:
///
/// `(2d-1)^(2d-1) / (y^y (1-y)^(1-y) x^x (2d-1-x)^(2d-1-x))`, `y = min(x, 1/2)`.
pub fn g_d(dim: usize, x: f64) -> Result<f64> {
    if dim < 2 {
        return Err(invalid("d", "g_d needs d >= 2"));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(invalid("x", format!("need 0 <= x <= 1, got {x}")));
    }
    let s = (2 * dim - 1) as f64;
    let y = x.min(0.5);
    let log = xlnx(s) - xlnx(y) - xlnx(1.0 - y) - xlnx(x) - xlnx(s - x);
    Ok(log.exp())
}

/// `z = 1 - C^2 / ln(2d-2)` and the resulting bound `f(2d-2-z)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ImprovedBound {
    pub d: usize,
    #[serde(rename = "C")]
    pub c: f64,
    pub z: f64,
    pub bound: f64,
    /// `f(2d-2) - f(2d-2-z)`, the improvement over the crude bound.
    pub gap: f64,
}

fn z_of(dim: usize, c: f64) -> Result<f64> {
    if dim < 2 {
        return Err(invalid("d", "needs d >= 2"));
    }
    if c <= 0.0 || !c.is_finite() {
        return Err(invalid("C", format!("need C > 0, got {c}")));
    }
    Ok(1.0 - c * c / ((2 * dim - 2) as f64).ln())
}

pub fn improved_upper_bound(dim: usize, c: f64) -> Result<ImprovedBound> {
    let z = z_of(dim, c)?;
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Inapplicable(format!(
            "z = 1 - C^2/ln(2d-2) = {z:.6} is outside (0,1) for d={dim}, C={c}"
        )));
    }
    let r = (2 * dim - 2) as f64;
    let bound = f(r - z)?;
    Ok(ImprovedBound {
        d: dim,
        c,
        z,
        bound,
        gap: f(r)? - bound,
    })
}

/// Both sides of `g_d(x) <= C^2 e (2d-1) / (2d-2)^(1-x)`.
pub fn improved_check(dim: usize, c: f64, x: f64) -> Result<(f64, f64)> {
    let lhs = g_d(dim, x)?;
    let s = (2 * dim - 1) as f64;
    let rhs = c * c * std::f64::consts::E * s / ((2 * dim - 2) as f64).powf(1.0 - x);
    Ok((lhs, rhs))
}

/// `1 / (2d-2 + C^2/ln(2d-2))` without the applicability check.
pub fn thm_pc_lower_formula(dim: usize, c: f64) -> Result<f64> {
    if dim < 2 {
        return Err(invalid("d", "needs d >= 2"));
    }
    let r = (2 * dim - 2) as f64;
    Ok(1.0 / (r + c * c / r.ln()))
}

/// Site threshold lower bound from the improved growth bound.
pub fn thm_pc_lower(dim: usize, c: f64) -> Result<ThresholdBound> {
    let imp = improved_upper_bound(dim, c)?;
    Ok(ThresholdBound {
        flavor: Flavor::Site,
        dim: Some(dim),
        value: thm_pc_lower_formula(dim, c)?,
        direction: Direction::Lower,
        // the growth bound holds for d large enough, with no explicit cutoff
        rigor: Rigor::Conditional,
        provenance: vec![
            format!("eden-turns: z=1-C^2/ln(2d-2)={:.12}", imp.z),
            "r_dot<=2d-3+C^2/ln(2d-2)".into(),
            "p=1/(1+r)".into(),
        ],
    })
}
