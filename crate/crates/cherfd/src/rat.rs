//! Exact rational scalars.
//!
//! Every weight, parameter and series exponent in this crate is a [`Rat`]:
//! an arbitrary-precision rational kept in lowest terms with a positive
//! denominator. Nothing is ever floated; all comparisons are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// Exact rational number. `BigRational` already guarantees lowest terms
/// and a positive denominator.
pub type Rat = BigRational;

/// Parse a rational written as `p/q`, or as a plain integer string.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError(s.to_owned()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| RatParseError(s.to_owned()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| RatParseError(s.to_owned()))?;
        if d.is_zero() {
            return Err(RatParseError(s.to_owned()));
        }
        Ok(Rat::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|_| RatParseError(s.to_owned()))?;
        Ok(Rat::from_integer(n))
    }
}

/// Rational from small integers, for tests and fixtures.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a small integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatParseError(pub String);

impl fmt::Display for RatParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational (expected `p/q` or an integer): {:?}", self.0)
    }
}

impl std::error::Error for RatParseError {}

/// An upper bound that may be infinite, used for expansion validity bounds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum UpperBound {
    Finite(Rat),
    Infinite,
}

impl UpperBound {
    pub fn is_infinite(&self) -> bool {
        matches!(self, UpperBound::Infinite)
    }

    /// True when `x` lies strictly below the bound.
    pub fn admits(&self, x: &Rat) -> bool {
        match self {
            UpperBound::Finite(b) => x < b,
            UpperBound::Infinite => true,
        }
    }

    pub fn min(self, other: UpperBound) -> UpperBound {
        std::cmp::min(self, other)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            UpperBound::Finite(b) => Some(b),
            UpperBound::Infinite => None,
        }
    }
}

impl fmt::Display for UpperBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperBound::Finite(b) => write!(f, "{b}"),
            UpperBound::Infinite => write!(f, "inf"),
        }
    }
}

impl From<Rat> for UpperBound {
    fn from(r: Rat) -> Self {
        UpperBound::Finite(r)
    }
}
