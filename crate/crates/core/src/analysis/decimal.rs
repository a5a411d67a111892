use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Renders `x` with exactly `places` decimals, rounding half away from zero.
pub fn render_decimal(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let two = BigInt::from(2);
    // floor(scaled + 1/2)
    let rounded = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = places as usize
        )
    }
}

/// `a/b` in lowest terms; integers render without a denominator.
pub fn render_fraction(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rounding() {
        assert_eq!(render_decimal(&r(9, 7), 4), "1.2857");
        assert_eq!(render_decimal(&r(1, 1), 4), "1.0000");
        assert_eq!(render_decimal(&r(21, 16), 3), "1.313");
        assert_eq!(render_decimal(&r(200, 247), 3), "0.810");
        assert_eq!(render_decimal(&r(1, 2000), 3), "0.001");
        assert_eq!(render_decimal(&r(-1, 3), 2), "-0.33");
        assert_eq!(render_decimal(&r(-1, 1000), 2), "0.00");
        assert_eq!(render_decimal(&r(7, 2), 0), "4");
    }

    #[test]
    fn fractions() {
        assert_eq!(render_fraction(&r(6, 8)), "3/4");
        assert_eq!(render_fraction(&r(4, 2)), "2");
        assert_eq!(render_fraction(&r(0, 5)), "0");
    }
}
