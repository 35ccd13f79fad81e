//! Exact rational helpers: harmonic numbers, dipole centers, decimals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, i| acc + ratio(1, i))
}

/// `H_(n-1) + 1/ceil(n/2)`, the expected face count of the `n`-edge dipole.
/// Defined for `n >= 1`; `n = 1` gives 1.
pub(crate) fn dipole_center(n: usize) -> BigRational {
    debug_assert!(n >= 1);
    harmonic(n - 1) + ratio(1, n.div_ceil(2))
}

/// `Delta_n = H_(n-1) + 1/ceil(n/2)` for `n >= 2`.
pub fn delta(n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("Delta_n needs n >= 2, got {n}")));
    }
    Ok(dipole_center(n))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Formats `x` with `digits` significant digits in plain decimal notation.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Decimal rendering of an exact rational, 12 significant digits.
pub fn decimal(r: &BigRational) -> String {
    format_sig(to_f64(r), 12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_values() {
        assert!(harmonic(0).is_zero());
        assert_eq!(harmonic(3), ratio(11, 6));
        assert_eq!(harmonic(6), ratio(49, 20));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(2).unwrap(), integer(2));
        assert_eq!(delta(4).unwrap(), ratio(7, 3));
        assert_eq!(delta(5).unwrap(), ratio(29, 12));
        assert!(delta(1).is_err());
        assert_eq!(dipole_center(1), integer(1));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(7.0 / 3.0, 12), "2.33333333333");
        assert_eq!(format_sig(2.25, 12), "2.25");
        assert_eq!(format_sig(12.394449154672, 12), "12.3944491547");
        assert_eq!(format_sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_sig(1.0, 12), "1");
    }
}
