//! Column analysis of decomposition matrices: sign-twist resolution,
//! detection of the first Hom witness, and the window-exact expansion of a
//! simple module in the Verma basis.
//!
//! The analysis follows a single certified recipe. In the column of τ₀,
//! scan rows in ascending weight order. If every entry below the column's
//! `rows_complete_below` threshold is zero apart from the diagonal, there is
//! nothing to correct. If the first nonzero entry sits at a unique row σ₁
//! with multiplicity 1, then
//!
//!   [L(τ₀)] = [M(τ₀)] − [M(σ₁)] + unknown terms at weights ≥ D,
//!
//! where D is the largest bound below which the weight inventory certifies
//! that no further irreducible exists. Anything richer — multiplicity
//! above 1, a second certified nonzero row — is refused rather than
//! guessed: inverting a general decomposition submatrix whose completeness
//! we cannot certify is out of scope.
//!
//! D is conservative on purpose: it stops at the smallest weight of *any*
//! irreducible above the witness, with or without a column entry, because
//! chained corrections through the witness can introduce Verma terms with
//! zero direct multiplicity.

use crate::rat::{Rat, UpperBound};
use crate::repdata::{DecompColumn, DecompMatrix, GroupData, IrrepLabel};
use crate::weights::{h_weight, WeightError};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("matrix has no column {0}")]
    UnknownColumn(IrrepLabel),
    #[error("no sign twist defined for {0}")]
    MissingTwist(IrrepLabel),
    #[error("column {col}: row {row} at h = {row_h} is not above the diagonal at h = {col_h}")]
    RowNotAboveDiagonal {
        col: IrrepLabel,
        row: IrrepLabel,
        row_h: Rat,
        col_h: Rat,
    },
    #[error("column {col}: several nonzero rows at the witness level h = {level}: {rows:?}")]
    AmbiguousLevel {
        col: IrrepLabel,
        level: Rat,
        rows: Vec<IrrepLabel>,
    },
    #[error("column {0} is diagonal-only below its completeness threshold")]
    NoWitness(IrrepLabel),
    #[error("cannot certify the scan: {0}")]
    IncompleteInventory(String),
    #[error("the single-correction expansion does not apply: {0}")]
    UnsupportedExpansion(String),
}

/// Outcome of the Hom scan over one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    /// Category-O label τ₀ of the analyzed column.
    pub source: IrrepLabel,
    /// First off-diagonal nonzero row σ₁, in ascending weight order.
    pub witness: IrrepLabel,
    /// h_c(σ₁).
    pub witness_h: Rat,
    /// The multiplicity at the witness row, at least 1.
    pub witness_mult: BigUint,
    /// Open interval of weights on which all Hom spaces out of M(τ₀) into
    /// other Vermas are certified zero. Its upper end is `witness_h`.
    pub vanishing_range: (Rat, Rat),
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column {}: witness {} at h = {} (multiplicity {}), vanishing on ({}, {})",
            self.source,
            self.witness,
            self.witness_h,
            self.witness_mult,
            self.vanishing_range.0,
            self.vanishing_range.1
        )
    }
}

/// Expansion of [L(target)] in the basis of Verma classes, exact below
/// `valid_below`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothExpansion {
    pub target: IrrepLabel,
    /// Integer coefficients; always starts with (1, target).
    pub terms: Vec<(BigInt, IrrepLabel)>,
    /// Unknown further terms all have weight ≥ this bound.
    pub valid_below: UpperBound,
}

impl fmt::Display for GrothExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}) =", self.target)?;
        for (i, (coeff, label)) in self.terms.iter().enumerate() {
            if coeff.is_one() {
                write!(f, "{}M({label})", if i == 0 { " " } else { " + " })?;
            } else if (-coeff).is_one() {
                write!(f, " - M({label})")?;
            } else if coeff.is_negative() {
                write!(f, " - {}*M({label})", -coeff)?;
            } else {
                write!(f, " + {coeff}*M({label})")?;
            }
        }
        match &self.valid_below {
            UpperBound::Finite(d) => write!(f, " + unknown terms at h >= {d}"),
            UpperBound::Infinite => Ok(()),
        }
    }
}

/// Rewrite a column's labels through the group's sign-twist dictionary when
/// the matrix is flagged twisted; identity otherwise.
pub fn resolve_labels(
    matrix: &DecompMatrix,
    col: &IrrepLabel,
    group: &GroupData,
) -> Result<DecompColumn, AnalysisError> {
    let column = matrix
        .column(col)
        .ok_or_else(|| AnalysisError::UnknownColumn(col.clone()))?;
    if !matrix.twisted_labels() {
        return Ok(column.clone());
    }
    let twist = |label: &IrrepLabel| -> Result<IrrepLabel, AnalysisError> {
        let resolved = group
            .twist_of(label)
            .ok_or_else(|| AnalysisError::MissingTwist(label.clone()))?;
        if group.irrep(resolved).is_none() {
            return Err(WeightError::UnknownLabel(resolved.clone()).into());
        }
        Ok(resolved.clone())
    };
    let col_label = twist(column.col_label())?;
    let mut entries = std::collections::BTreeMap::new();
    for (row, mult) in column.entries() {
        entries.insert(twist(row)?, mult.clone());
    }
    Ok(DecompColumn::new(
        col_label,
        entries,
        column.rows_complete_below().cloned(),
    ))
}

struct Scan {
    col_label: IrrepLabel,
    col_h: Rat,
    rcb: Rat,
    /// Off-diagonal rows sorted ascending by (h, name).
    rows: Vec<(Rat, IrrepLabel, BigUint)>,
}

fn scan_column(
    matrix: &DecompMatrix,
    col: &IrrepLabel,
    group: &GroupData,
    c: &Rat,
) -> Result<Scan, AnalysisError> {
    let column = resolve_labels(matrix, col, group)?;
    let col_label = column.col_label().clone();
    let col_h = h_weight(group, c, &col_label)?;
    let rcb = column.rows_complete_below().cloned().ok_or_else(|| {
        AnalysisError::IncompleteInventory(format!(
            "column {col_label} carries no rows_complete_below threshold"
        ))
    })?;
    if rcb <= col_h {
        return Err(AnalysisError::IncompleteInventory(format!(
            "column {col_label}: completeness threshold {rcb} does not exceed the \
             diagonal weight {col_h}"
        )));
    }
    let mut rows = Vec::new();
    for (row, mult) in column.entries() {
        if row == &col_label {
            continue;
        }
        let h = h_weight(group, c, row)?;
        if !mult.is_zero() && h <= col_h {
            return Err(AnalysisError::RowNotAboveDiagonal {
                col: col_label,
                row: row.clone(),
                row_h: h,
                col_h,
            });
        }
        rows.push((h, row.clone(), mult.clone()));
    }
    rows.sort_by(|(ha, la, _), (hb, lb, _)| ha.cmp(hb).then_with(|| la.cmp(lb)));
    Ok(Scan { col_label, col_h, rcb, rows })
}

/// Scan the column of `col` for its first Hom witness.
///
/// Certification rests on the column's own completeness threshold: below
/// `rows_complete_below`, absent rows are zeros, so the first nonzero entry
/// found there really is the first over all of Irr W. A first nonzero at or
/// above the threshold cannot be certified first and is refused.
pub fn hom_report(
    matrix: &DecompMatrix,
    col: &IrrepLabel,
    group: &GroupData,
    c: &Rat,
) -> Result<HomReport, AnalysisError> {
    let scan = scan_column(matrix, col, group, c)?;
    let (witness_h, witness, witness_mult) = scan
        .rows
        .iter()
        .find(|(_, _, mult)| !mult.is_zero())
        .cloned()
        .ok_or_else(|| AnalysisError::NoWitness(scan.col_label.clone()))?;
    if witness_h >= scan.rcb {
        return Err(AnalysisError::IncompleteInventory(format!(
            "first nonzero row {witness} sits at h = {witness_h}, beyond the certified \
             zone below {}",
            scan.rcb
        )));
    }
    // the whole witness level must be otherwise clean
    let peers: Vec<IrrepLabel> = scan
        .rows
        .iter()
        .filter(|(h, label, mult)| h == &witness_h && label != &witness && !mult.is_zero())
        .map(|(_, label, _)| label.clone())
        .collect();
    if !peers.is_empty() {
        let mut rows = vec![witness.clone()];
        rows.extend(peers);
        return Err(AnalysisError::AmbiguousLevel {
            col: scan.col_label,
            level: witness_h,
            rows,
        });
    }
    Ok(HomReport {
        source: scan.col_label,
        witness,
        witness_h: witness_h.clone(),
        witness_mult,
        vanishing_range: (scan.col_h, witness_h),
    })
}

/// Smallest listed weight strictly above `floor` (only irreps carrying
/// weight data can be evaluated).
fn min_listed_weight_above(group: &GroupData, c: &Rat, floor: &Rat, strict: bool) -> UpperBound {
    let mut best = UpperBound::Infinite;
    for irrep in group.irreps() {
        if irrep.refl_sum().is_none() {
            continue;
        }
        let h = h_weight(group, c, irrep.label()).expect("listed irrep with data");
        if (strict && &h > floor) || (!strict && &h >= floor) {
            best = best.min(UpperBound::Finite(h));
        }
    }
    best
}

/// Largest bound up to which the inventory certifies that no irreducible of
/// the group (listed or not) exists strictly above `base`.
fn no_irrep_bound(group: &GroupData, c: &Rat, base: &Rat) -> UpperBound {
    if group.irreps_complete() && group.all_weights_known() {
        return UpperBound::Infinite;
    }
    if c == group.c_ref() {
        if let Some((lo, hi)) = group.inventory_complete_on() {
            if lo <= base && base < hi {
                return UpperBound::Finite(hi.clone());
            }
        }
    }
    UpperBound::Finite(base.clone())
}

/// Window-exact expansion of [L(col)] in the Verma basis.
pub fn expansion(
    matrix: &DecompMatrix,
    col: &IrrepLabel,
    group: &GroupData,
    c: &Rat,
) -> Result<GrothExpansion, AnalysisError> {
    let scan = scan_column(matrix, col, group, c)?;
    match hom_report(matrix, col, group, c) {
        Ok(report) => {
            if !report.witness_mult.is_one() {
                return Err(AnalysisError::UnsupportedExpansion(format!(
                    "witness {} has multiplicity {}",
                    report.witness, report.witness_mult
                )));
            }
            for (h, label, mult) in &scan.rows {
                if label != &report.witness && !mult.is_zero() && h < &scan.rcb {
                    return Err(AnalysisError::UnsupportedExpansion(format!(
                        "second certified nonzero row {label} at h = {h}"
                    )));
                }
            }
            let valid_below = no_irrep_bound(group, c, &report.witness_h)
                .min(min_listed_weight_above(group, c, &report.witness_h, true));
            if !valid_below.admits(&report.witness_h) {
                return Err(AnalysisError::IncompleteInventory(format!(
                    "no inventory certification above the witness at h = {}",
                    report.witness_h
                )));
            }
            Ok(GrothExpansion {
                target: report.source,
                terms: vec![
                    (BigInt::one(), scan.col_label),
                    (-BigInt::one(), report.witness),
                ],
                valid_below,
            })
        }
        Err(AnalysisError::NoWitness(_)) => {
            // Diagonal-only below the threshold: corrections, if any, start
            // at rcb or beyond. Extend past rcb only where the inventory can
            // certify that no irreducible exists.
            let valid_below = if group.irreps_complete() && group.all_weights_known() {
                min_listed_weight_above(group, c, &scan.rcb, false)
            } else {
                let inventory_reaches = c == group.c_ref()
                    && group
                        .inventory_complete_on()
                        .is_some_and(|(lo, hi)| lo <= &scan.rcb && &scan.rcb < hi);
                if inventory_reaches {
                    let (_, hi) = group.inventory_complete_on().expect("checked");
                    UpperBound::Finite(hi.clone())
                        .min(min_listed_weight_above(group, c, &scan.rcb, false))
                } else {
                    UpperBound::Finite(scan.rcb.clone())
                }
            };
            Ok(GrothExpansion {
                target: scan.col_label.clone(),
                terms: vec![(BigInt::one(), scan.col_label)],
                valid_below,
            })
        }
        Err(other) => Err(other),
    }
}
