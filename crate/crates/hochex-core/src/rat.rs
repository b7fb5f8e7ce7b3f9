//! The scalar type: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (numerator and denominator coprime, denominator positive), so this module
//! only adds construction and parsing helpers.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rat = num_rational::BigRational;

/// The rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `p/q`. Panics when `q = 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "rational with zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Error produced when a rational literal cannot be parsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError {
    /// The offending input.
    pub input: String,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed rational literal {:?} (expected `p` or `p/q` with q ≠ 0)", self.input)
    }
}

impl core::error::Error for ParseRatError {}

/// Parses `"p"` or `"p/q"` (optionally signed, arbitrary precision) into a
/// reduced rational. Rejects a zero denominator.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError { input: s.to_string() };
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| err())?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Renders a rational as `"p"` or `"p/q"` — the same grammar `parse_rat`
/// accepts, so values round-trip bit-exactly.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// True when the rational is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Absolute value.
pub fn rat_abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}
