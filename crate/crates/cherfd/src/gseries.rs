//! Truncated graded-character arithmetic.
//!
//! A [`GradedSeries`] is a finite set of (exponent, coefficient) pairs with
//! exact rational exponents, arbitrary-precision integer coefficients, and
//! an explicit half-open validity window [lo, hi). Inside the window an
//! absent exponent means coefficient 0; outside the window nothing is
//! claimed, and [`GradedSeries::coeff_at`] refuses to answer rather than
//! silently returning 0.
//!
//! Exponents are eigenvalues of the grading element, so the symmetry test
//! downstream is about 0 rather than about a module-relative degree.

use crate::rat::Rat;
use crate::repdata::{GroupData, IrrepLabel};
use crate::weights::{h_weight, WeightError};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("empty window: [{lo}, {hi}) contains no exponents")]
    EmptyWindow { lo: Rat, hi: Rat },
    #[error("exponent {e} lies outside the certified window [{lo}, {hi})")]
    OutsideWindow { e: Rat, lo: Rat, hi: Rat },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Truncated formal series with a certified validity window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    coeffs: BTreeMap<Rat, BigInt>,
    lo: Rat,
    hi: Rat,
}

impl GradedSeries {
    /// Build a series from explicit terms. Zero coefficients are dropped;
    /// every exponent must satisfy lo ≤ e < hi.
    pub fn new(
        terms: impl IntoIterator<Item = (Rat, BigInt)>,
        lo: Rat,
        hi: Rat,
    ) -> Result<Self, SeriesError> {
        if lo >= hi {
            return Err(SeriesError::EmptyWindow { lo, hi });
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            if e < lo || e >= hi {
                return Err(SeriesError::OutsideWindow { e, lo, hi });
            }
            if !c.is_zero() {
                let slot = coeffs.entry(e).or_insert_with(BigInt::zero);
                *slot += c;
                if slot.is_zero() {
                    // re-cancellation from repeated exponents
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(GradedSeries { coeffs, lo, hi })
    }

    pub fn window(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    /// Stored terms in ascending exponent order. Absent exponents inside the
    /// window are zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient at exponent `e`. Answers only inside the window.
    pub fn coeff_at(&self, e: &Rat) -> Result<BigInt, SeriesError> {
        if e < &self.lo || e >= &self.hi {
            return Err(SeriesError::OutsideWindow {
                e: e.clone(),
                lo: self.lo.clone(),
                hi: self.hi.clone(),
            });
        }
        Ok(self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Restrict to a smaller window, dropping coefficients outside it.
    pub fn restricted(&self, lo: Rat, hi: Rat) -> Result<GradedSeries, SeriesError> {
        let lo = std::cmp::max(lo, self.lo.clone());
        let hi = std::cmp::min(hi, self.hi.clone());
        if lo >= hi {
            return Err(SeriesError::EmptyWindow { lo, hi });
        }
        let coeffs = self
            .coeffs
            .range(lo.clone()..hi.clone())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(GradedSeries { coeffs, lo, hi })
    }

    /// Widen the window floor. The caller asserts that all coefficients in
    /// [new_lo, lo) are zero; used for Verma characters, which vanish below
    /// their lowest weight.
    pub(crate) fn with_floor(mut self, new_lo: Rat) -> GradedSeries {
        assert!(new_lo <= self.lo, "with_floor may only extend the window");
        self.lo = new_lo;
        self
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c} * t^({e})")?;
        }
        Ok(())
    }
}

/// The k-th graded dimension of the polynomial algebra on the dual of a
/// d-dimensional space: the binomial coefficient C(d − 1 + k, d − 1).
pub fn poly_coeff(dim_v: &BigUint, k: u64) -> BigUint {
    assert!(!dim_v.is_zero(), "dim_v must be positive");
    // running product C(d-1+k, k) built one factor at a time; each partial
    // product is itself a binomial, so the division is exact
    let d_minus_1 = dim_v - 1u32;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (&d_minus_1 + i) / i;
    }
    acc
}

/// Truncated graded character of the Verma module with lowest weight τ:
/// coefficient dim τ · C(dim V − 1 + k, dim V − 1) at exponent h_c(τ) + k,
/// for each integer k ≥ 0 with h_c(τ) + k < hi. Window [h_c(τ), hi).
pub fn verma_series(
    group: &GroupData,
    c: &Rat,
    tau: &IrrepLabel,
    hi: &Rat,
) -> Result<GradedSeries, SeriesError> {
    let h = h_weight(group, c, tau)?;
    if hi <= &h {
        return Err(SeriesError::EmptyWindow {
            lo: h,
            hi: hi.clone(),
        });
    }
    let dim = BigInt::from(group.irrep(tau).expect("checked by h_weight").dim().clone());
    let mut terms = Vec::new();
    let mut k: u64 = 0;
    loop {
        let e = &h + Rat::from_integer(BigInt::from(k));
        if &e >= hi {
            break;
        }
        terms.push((e, &dim * BigInt::from(poly_coeff(group.dim_v(), k))));
        k += 1;
    }
    GradedSeries::new(terms, h, hi.clone())
}

/// Exact integer linear combination of series. The window of the result is
/// the intersection of the input windows.
pub fn combine(terms: &[(BigInt, &GradedSeries)]) -> Result<GradedSeries, SeriesError> {
    assert!(!terms.is_empty(), "combine needs at least one term");
    let lo = terms
        .iter()
        .map(|(_, s)| s.lo.clone())
        .max()
        .expect("nonempty");
    let hi = terms
        .iter()
        .map(|(_, s)| s.hi.clone())
        .min()
        .expect("nonempty");
    if lo >= hi {
        return Err(SeriesError::EmptyWindow { lo, hi });
    }
    let mut coeffs: BTreeMap<Rat, BigInt> = BTreeMap::new();
    for (scalar, series) in terms {
        if scalar.is_zero() {
            continue;
        }
        for (e, c) in series.coeffs.range(lo.clone()..hi.clone()) {
            let slot = coeffs.entry(e.clone()).or_insert_with(BigInt::zero);
            *slot += scalar * c;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(GradedSeries { coeffs, lo, hi })
}
