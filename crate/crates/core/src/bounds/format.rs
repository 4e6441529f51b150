use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Direction;

/// Formats `value` with `decimals` digits after the point, rounding down for
/// lower bounds and up for upper bounds, so the printed number is itself a
/// valid bound. Works on the exact binary value of the float.
pub fn conservative_decimal(value: f64, decimals: u32, direction: Direction) -> String {
    let Some(exact) = BigRational::from_float(value) else {
        return value.to_string();
    };
    let scale = BigRational::from_integer(BigInt::from(10u32).pow(decimals));
    let scaled = exact * scale;
    let units = match direction {
        Direction::Lower => scaled.floor(),
        Direction::Upper => scaled.ceil(),
    }
    .to_integer();
    fixed_point(&units, decimals)
}

fn fixed_point(units: &BigInt, decimals: u32) -> String {
    let neg = units.is_negative();
    let digits = units.abs().to_string();
    let d = decimals as usize;
    let body = if d == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = d + 1);
        let (int, frac) = padded.split_at(padded.len() - d);
        format!("{int}.{frac}")
    };
    if neg && !units.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// `value` with `digits` significant digits, plain notation when reasonable.
pub fn significant(value: f64, digits: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return format!("{:.*}", digits.saturating_sub(1), 0.0);
    }
    let magnitude = value.abs().log10().floor() as i64;
    let decimals = digits as i64 - 1 - magnitude;
    if (0..=20).contains(&decimals) {
        format!("{value:.*}", decimals as usize)
    } else {
        format!("{value:.*e}", digits.saturating_sub(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_direction() {
        assert_eq!(conservative_decimal(0.252265358, 4, Direction::Lower), "0.2522");
        assert_eq!(conservative_decimal(0.252265358, 4, Direction::Upper), "0.2523");
        assert_eq!(conservative_decimal(2.4107485, 5, Direction::Lower), "2.41074");
        assert_eq!(conservative_decimal(4.0, 3, Direction::Upper), "4.000");
        assert_eq!(conservative_decimal(-0.25, 1, Direction::Lower), "-0.3");
        assert_eq!(conservative_decimal(0.05, 0, Direction::Upper), "1");
    }

    #[test]
    fn binary_value_matters() {
        // 0.1 is slightly above 1/10 in binary, so an upper bound at 20
        // decimals must not print exactly 0.1000...
        let s = conservative_decimal(0.1, 20, Direction::Upper);
        assert_eq!(s, "0.10000000000000000556");
        assert_eq!(conservative_decimal(0.1, 3, Direction::Lower), "0.100");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(significant(0.252265358194, 12), "0.252265358194");
        assert_eq!(significant(6.75, 4), "6.750");
        assert_eq!(significant(12345.678, 3), "1.23e4");
        assert_eq!(significant(1e-30, 3), "1.00e-30");
    }
}
