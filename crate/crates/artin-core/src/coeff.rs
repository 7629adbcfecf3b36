//! Coefficient field: exact rationals.
//!
//! Coefficients are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so the canonical-form invariants
//! hold by construction. Helpers here cover the fraction-string format used by
//! all file interfaces ("num" or "num/den").

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

pub type Coeff = BigRational;

/// Coefficient from an integer.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficient from a numerator/denominator pair. Panics on zero denominator.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCoeffError(pub String);

impl fmt::Display for ParseCoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction string: {:?}", self.0)
    }
}

impl std::error::Error for ParseCoeffError {}

/// Parse "num" or "num/den" with arbitrary-precision parts.
pub fn parse_coeff(s: &str) -> Result<Coeff, ParseCoeffError> {
    let s = s.trim();
    let bad = || ParseCoeffError(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Render as "num" when the denominator is 1, otherwise "num/den".
pub fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Exact q-th root in the rationals, if one exists.
///
/// For even `q` only nonnegative inputs have roots and the nonnegative root is
/// returned; for odd `q` the sign passes through.
pub fn coeff_nth_root(c: &Coeff, q: u32) -> Option<Coeff> {
    assert!(q >= 1);
    if c.is_zero() {
        return Some(Coeff::zero());
    }
    if q % 2 == 0 && c.is_negative() {
        return None;
    }
    let num = int_nth_root_exact(&c.numer().abs(), q)?;
    let den = int_nth_root_exact(&c.denom().abs(), q)?;
    let mut root = BigRational::new(num, den);
    if c.is_negative() {
        root = -root;
    }
    Some(root)
}

fn int_nth_root_exact(n: &BigInt, q: u32) -> Option<BigInt> {
    let r = n.nth_root(q);
    if r.pow(q) == *n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-1", "7/3", "-5/2", "12345678901234567890/7"] {
            let c = parse_coeff(s).unwrap();
            assert_eq!(format_coeff(&c), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_coeff(&parse_coeff("4/2").unwrap()), "2");
        assert_eq!(format_coeff(&parse_coeff("1/-2").unwrap()), "-1/2");
        assert!(parse_coeff("1/0").is_err());
        assert!(parse_coeff("x").is_err());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(coeff_nth_root(&coeff_ratio(4, 9), 2), Some(coeff_ratio(2, 3)));
        assert_eq!(coeff_nth_root(&coeff_int(-8), 3), Some(coeff_int(-2)));
        assert_eq!(coeff_nth_root(&coeff_int(2), 2), None);
        assert_eq!(coeff_nth_root(&coeff_int(-4), 2), None);
    }
}
