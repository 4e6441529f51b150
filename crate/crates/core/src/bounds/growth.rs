use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use super::{Direction, Flavor, GrowthBound, GrowthQuantity, Rigor, ThresholdBound};
use crate::enumeration::AnimalKind;
use crate::error::{invalid, Error, Result};

/// `f(r) = (1+r)^(1+r) / r^r`, with `f(0) = 1`.
///
/// Direct powers are exact at small integers (`f(1) = 4`, `f(2) = 6.75`);
/// beyond `r = 100` the product form `(1+r) exp(r ln(1 + 1/r))` avoids
/// overflow.
pub fn f(r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(invalid("r", format!("f needs r >= 0, got {r}")));
    }
    if r == 0.0 {
        return Ok(1.0);
    }
    if r.is_infinite() {
        return Ok(f64::INFINITY);
    }
    if r <= 100.0 {
        Ok((1.0 + r).powf(1.0 + r) / r.powf(r))
    } else {
        Ok((1.0 + r) * (r * (1.0 / r).ln_1p()).exp())
    }
}

/// `r(p) = (1-p)/p`.
pub fn r_of_p(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(invalid("p", format!("need 0 < p < 1, got {p}")));
    }
    Ok((1.0 - p) / p)
}

/// `p(r) = 1/(1+r)`.
pub fn p_of_r(r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(invalid("r", format!("need r >= 0, got {r}")));
    }
    Ok(1.0 / (1.0 + r))
}

const BISECTION_TOL: f64 = 1e-12;
const BISECTION_CAP: usize = 200;

/// The `r >= 0` with `f(r) = a`. Returns the upper end of the final
/// bracket, so `f(result) >= a`.
pub fn f_inverse(a: f64) -> Result<f64> {
    if a.is_nan() || a < 1.0 || a.is_infinite() {
        return Err(invalid("a", format!("f_inverse needs finite a >= 1, got {a}")));
    }
    if a == 1.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0f64, a.max(1.0));
    for _ in 0..BISECTION_CAP {
        if hi - lo <= BISECTION_TOL {
            return Ok(hi);
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(hi);
        }
        if f(mid)? < a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    panic!("bisection for f_inverse({a}) did not converge in {BISECTION_CAP} steps");
}

fn flavor_of(quantity: GrowthQuantity) -> Result<Flavor> {
    match quantity {
        GrowthQuantity::A | GrowthQuantity::B => Ok(Flavor::Bond),
        GrowthQuantity::ADot | GrowthQuantity::BDot => Ok(Flavor::Site),
        other => Err(invalid(
            "quantity",
            format!("no threshold is dual to `{}`", other.symbol()),
        )),
    }
}

/// Upper bound `a` on a growth rate gives `p_c >= 1/(1 + f^{-1}(a))`.
pub fn pc_lower_from_growth_upper(a_upper: &GrowthBound) -> Result<ThresholdBound> {
    if a_upper.direction != Direction::Upper {
        return Err(invalid("direction", "a threshold lower bound needs a growth upper bound"));
    }
    if a_upper.value <= 1.0 {
        return Err(Error::Vacuous(format!(
            "growth upper bound {} gives p_c >= 1",
            a_upper.value
        )));
    }
    let flavor = flavor_of(a_upper.quantity)?;
    let r = f_inverse(a_upper.value)?;
    let mut provenance = a_upper.provenance.clone();
    provenance.push("r=f^-1(a) (bisection, upper end)".into());
    provenance.push("p=1/(1+r)".into());
    Ok(ThresholdBound {
        flavor,
        dim: a_upper.dim,
        value: p_of_r(r)?,
        direction: Direction::Lower,
        rigor: a_upper.rigor.meet(Rigor::Rigorous),
        provenance,
    })
}

/// Upper bound `p` on a threshold gives growth `>= f(r(p))`.
pub fn growth_lower_from_pc_upper(p_upper: &ThresholdBound) -> Result<GrowthBound> {
    if p_upper.direction != Direction::Upper {
        return Err(invalid("direction", "a growth lower bound needs a threshold upper bound"));
    }
    let r = r_of_p(p_upper.value)?;
    let mut provenance = p_upper.provenance.clone();
    provenance.push("r=(1-p)/p".into());
    provenance.push("a>=f(r)".into());
    Ok(GrowthBound {
        quantity: GrowthQuantity::for_flavor(p_upper.flavor),
        dim: p_upper.dim,
        value: f(r)?,
        direction: Direction::Lower,
        rigor: p_upper.rigor.meet(Rigor::Rigorous),
        provenance,
    })
}

/// `(2d-1)^(2d-1) / (2d-2)^(2d-2)`, i.e. `f(2d-2)`.
pub fn b_upper_crude(dim: usize) -> Result<f64> {
    if dim < 2 {
        return Err(invalid("d", "needs d >= 2"));
    }
    f((2 * dim - 2) as f64)
}

/// Kesten's counting argument at `p = 1/(2d-1)`.
pub fn kesten_growth_upper(dim: usize, kind: AnimalKind) -> Result<GrowthBound> {
    let value = b_upper_crude(dim)?;
    let quantity = if kind.is_site() {
        GrowthQuantity::ADot
    } else {
        GrowthQuantity::A
    };
    Ok(GrowthBound {
        quantity,
        dim: Some(dim),
        value,
        direction: Direction::Upper,
        rigor: Rigor::Rigorous,
        provenance: vec![
            "kesten: a_n p^n (1-p)^((2d-2)n+2d) <= 1".into(),
            "p=1/(2d-1)".into(),
            "f(2d-2)".into(),
        ],
    })
}

/// One line of the finite Kesten certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KestenTerm {
    pub n: usize,
    pub count: BigUint,
    /// `a_n p^n (1-p)^((2d-2)n+2d)` as an exact fraction.
    #[serde(serialize_with = "as_display")]
    pub product: BigRational,
    pub holds: bool,
}

fn as_display<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Checks `a_n p^n (1-p)^((2d-2)n + 2d) <= 1` exactly, where `counts[k]`
/// is the number of origin-containing bond animals with `k + 1` edges.
pub fn kesten_certificate(dim: usize, counts: &[BigUint], p: &BigRational) -> Vec<KestenTerm> {
    let one = BigRational::one();
    let q = &one - p;
    counts
        .iter()
        .enumerate()
        .map(|(k, count)| {
            let n = k + 1;
            let exp = ((2 * dim - 2) * n + 2 * dim) as u32;
            let product = BigRational::from_integer(BigInt::from(count.clone()))
                * Pow::pow(p, n as u32)
                * Pow::pow(&q, exp);
            let holds = product <= one;
            KestenTerm {
                n,
                count: count.clone(),
                product,
                holds,
            }
        })
        .collect()
}
