//! Data model and ingestion for group representation data and
//! decomposition-matrix columns.
//!
//! Datasets are UTF-8 JSON. A group file looks like
//!
//! ```json
//! {
//!   "name": "E8",
//!   "dim_v": 8,
//!   "num_reflections": 120,
//!   "c_ref": "1/3",
//!   "irreps": [
//!     {"label": "1_x", "dim": 1, "refl_char_sum": 120},
//!     {"label": "50_x", "dim": 50, "h_override": "-12"}
//!   ],
//!   "sign_twist": {"50_x": "50_x"},
//!   "inventory_complete_on": ["0", "2"],
//!   "irreps_complete": false
//! }
//! ```
//!
//! and a decomposition file like
//!
//! ```json
//! {
//!   "group": "E8",
//!   "twisted_labels": true,
//!   "columns": {
//!     "50_x": {"entries": {"50_x": 1, "700_xx": 1}, "rows_complete_below": "2"}
//!   }
//! }
//! ```
//!
//! Integer fields are arbitrary precision (JSON numbers of any size, or
//! strings); rationals are strings `"p/q"` or integer strings. Loading
//! validates every structural invariant; a violation is an error, never a
//! warning.
//!
//! Each irrep carries at most one of `refl_char_sum` (the sum A(τ) of the
//! character over all reflections) and `h_override` (a lowest weight stated
//! directly at the reference parameter `c_ref`). An override is back-solved
//! to A(τ) = (dim V/2 − h)·dim τ / c_ref at load time, which must come out
//! an integer. An irrep may also carry neither: it is then a label/dimension
//! placeholder whose weight cannot be queried, but which the inventory
//! assertion below may still speak about.
//!
//! `inventory_complete_on = (L, U)` asserts: every irreducible of the group
//! whose lowest weight at `c_ref` falls in the open interval (L, U) is
//! listed in this file **with weight data**. `irreps_complete = true`
//! asserts the listed labels are all of Irr W. These assertions are data,
//! supplied by the dataset author; window queries and expansion bounds cite
//! them when certifying exhaustiveness.

use crate::rat::{parse_rat, Rat};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use thiserror::Error;

/// Name of an irreducible representation, e.g. `50_x` or `700_xx`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IrrepLabel(String);

impl IrrepLabel {
    pub fn new(name: impl Into<String>) -> Self {
        IrrepLabel(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for IrrepLabel {
    fn from(s: &str) -> Self {
        IrrepLabel(s.to_owned())
    }
}

/// Where an irrep's weight data came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSource {
    /// A(τ) = Σ over all reflections s of τ(s), supplied directly.
    CharSum(BigInt),
    /// Lowest weight stated at the reference parameter; the equivalent
    /// character sum is back-solved and stored.
    Override { h_ref: Rat, refl_sum: BigInt },
}

impl WeightSource {
    pub fn refl_sum(&self) -> &BigInt {
        match self {
            WeightSource::CharSum(a) => a,
            WeightSource::Override { refl_sum, .. } => refl_sum,
        }
    }
}

/// One irreducible representation of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepData {
    label: IrrepLabel,
    dim: BigUint,
    source: Option<WeightSource>,
}

impl IrrepData {
    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn dim(&self) -> &BigUint {
        &self.dim
    }

    /// A(τ) when this irrep carries weight data.
    pub fn refl_sum(&self) -> Option<&BigInt> {
        self.source.as_ref().map(|s| s.refl_sum())
    }

    pub fn has_weight_data(&self) -> bool {
        self.source.is_some()
    }

    pub fn source(&self) -> Option<&WeightSource> {
        self.source.as_ref()
    }
}

/// A finite Coxeter group's representation-theoretic facts, immutable after
/// loading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    name: String,
    dim_v: BigUint,
    num_reflections: BigUint,
    c_ref: Rat,
    irreps: Vec<IrrepData>,
    index: BTreeMap<IrrepLabel, usize>,
    sign_twist: BTreeMap<IrrepLabel, IrrepLabel>,
    inventory_complete_on: Option<(Rat, Rat)>,
    irreps_complete: bool,
}

impl GroupData {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim_v(&self) -> &BigUint {
        &self.dim_v
    }

    pub fn num_reflections(&self) -> &BigUint {
        &self.num_reflections
    }

    pub fn c_ref(&self) -> &Rat {
        &self.c_ref
    }

    pub fn irreps(&self) -> &[IrrepData] {
        &self.irreps
    }

    pub fn irrep(&self, label: &IrrepLabel) -> Option<&IrrepData> {
        self.index.get(label).map(|&i| &self.irreps[i])
    }

    /// The sign-twist dictionary entry for `label`, if one is defined.
    pub fn twist_of(&self, label: &IrrepLabel) -> Option<&IrrepLabel> {
        self.sign_twist.get(label)
    }

    pub fn sign_twist(&self) -> &BTreeMap<IrrepLabel, IrrepLabel> {
        &self.sign_twist
    }

    pub fn inventory_complete_on(&self) -> Option<&(Rat, Rat)> {
        self.inventory_complete_on.as_ref()
    }

    /// True when the listed labels are asserted to be all of Irr W.
    pub fn irreps_complete(&self) -> bool {
        self.irreps_complete
    }

    /// True when every listed irrep carries weight data.
    pub fn all_weights_known(&self) -> bool {
        self.irreps.iter().all(|i| i.has_weight_data())
    }

    /// Serialize back to the dataset JSON format. Parsing the result yields
    /// an equal `GroupData`.
    pub fn to_json(&self) -> String {
        let file = GroupFile {
            name: self.name.clone(),
            dim_v: int_value(&BigInt::from(self.dim_v.clone())),
            num_reflections: int_value(&BigInt::from(self.num_reflections.clone())),
            c_ref: rat_value(&self.c_ref),
            irreps: self
                .irreps
                .iter()
                .map(|ir| IrrepFile {
                    label: ir.label.as_str().to_owned(),
                    dim: int_value(&BigInt::from(ir.dim.clone())),
                    refl_char_sum: match &ir.source {
                        Some(WeightSource::CharSum(a)) => Some(int_value(a)),
                        _ => None,
                    },
                    h_override: match &ir.source {
                        Some(WeightSource::Override { h_ref, .. }) => Some(rat_value(h_ref)),
                        _ => None,
                    },
                })
                .collect(),
            sign_twist: self
                .sign_twist
                .iter()
                .map(|(a, b)| (a.as_str().to_owned(), b.as_str().to_owned()))
                .collect(),
            inventory_complete_on: self
                .inventory_complete_on
                .as_ref()
                .map(|(lo, hi)| [rat_value(lo), rat_value(hi)]),
            irreps_complete: self.irreps_complete,
        };
        serde_json::to_string_pretty(&file).expect("group serialization cannot fail")
    }
}

/// One column of multiplicities [M(σ) : L(τ)], keyed by row label.
///
/// Absent rows mean entry 0 strictly below `rows_complete_below`; at or
/// above that threshold an absent row is unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompColumn {
    col_label: IrrepLabel,
    entries: BTreeMap<IrrepLabel, BigUint>,
    rows_complete_below: Option<Rat>,
}

impl DecompColumn {
    pub(crate) fn new(
        col_label: IrrepLabel,
        entries: BTreeMap<IrrepLabel, BigUint>,
        rows_complete_below: Option<Rat>,
    ) -> Self {
        DecompColumn { col_label, entries, rows_complete_below }
    }

    pub fn col_label(&self) -> &IrrepLabel {
        &self.col_label
    }

    pub fn entries(&self) -> &BTreeMap<IrrepLabel, BigUint> {
        &self.entries
    }

    pub fn entry(&self, row: &IrrepLabel) -> Option<&BigUint> {
        self.entries.get(row)
    }

    pub fn rows_complete_below(&self) -> Option<&Rat> {
        self.rows_complete_below.as_ref()
    }
}

/// Decomposition-matrix data: a set of columns over one group's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompMatrix {
    group: String,
    twisted_labels: bool,
    columns: BTreeMap<IrrepLabel, DecompColumn>,
}

impl DecompMatrix {
    #[cfg(test)]
    pub(crate) fn new_unchecked(
        group: String,
        twisted_labels: bool,
        columns: BTreeMap<IrrepLabel, DecompColumn>,
    ) -> Self {
        DecompMatrix { group, twisted_labels, columns }
    }

    pub fn group(&self) -> &str {
        &self.group
    }

    /// True when row/column labels must be read through the group's
    /// sign-twist dictionary, as for Hecke-algebra tables.
    pub fn twisted_labels(&self) -> bool {
        self.twisted_labels
    }

    pub fn columns(&self) -> &BTreeMap<IrrepLabel, DecompColumn> {
        &self.columns
    }

    pub fn column(&self, raw: &IrrepLabel) -> Option<&DecompColumn> {
        self.columns.get(raw)
    }
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed dataset {path}: {message}")]
    Parse { path: String, message: String },
    #[error("duplicate label {0}")]
    DuplicateLabel(IrrepLabel),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown label {0}")]
    UnknownLabel(IrrepLabel),
    #[error("column {0} is missing diagonal entry 1 at its own label")]
    BadDiagonal(IrrepLabel),
    #[error("no sign twist defined for {0}")]
    MissingTwist(IrrepLabel),
    #[error("decomposition file targets group {found:?}, loaded group is {expected:?}")]
    GroupMismatch { expected: String, found: String },
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: String,
    dim_v: serde_json::Value,
    num_reflections: serde_json::Value,
    c_ref: serde_json::Value,
    irreps: Vec<IrrepFile>,
    #[serde(default)]
    sign_twist: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inventory_complete_on: Option<[serde_json::Value; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    irreps_complete: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IrrepFile {
    label: String,
    dim: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    refl_char_sum: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h_override: Option<serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompFile {
    group: String,
    twisted_labels: bool,
    columns: BTreeMap<String, ColumnFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColumnFile {
    entries: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows_complete_below: Option<serde_json::Value>,
}

/// Exact integer from a JSON number or string field.
fn int_from_value(v: &serde_json::Value, what: &str) -> Result<BigInt, DataError> {
    let text = match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.trim().to_owned(),
        other => {
            return Err(DataError::InvariantViolation(format!(
                "{what}: expected an integer, got {other}"
            )))
        }
    };
    BigInt::from_str(&text).map_err(|_| {
        DataError::InvariantViolation(format!("{what}: not an integer: {text:?}"))
    })
}

fn uint_from_value(v: &serde_json::Value, what: &str) -> Result<BigUint, DataError> {
    let n = int_from_value(v, what)?;
    n.to_biguint().ok_or_else(|| {
        DataError::InvariantViolation(format!("{what}: must be nonnegative, got {n}"))
    })
}

/// Exact rational from a JSON string (`"p/q"` or integer string) or number.
fn rat_from_value(v: &serde_json::Value, what: &str) -> Result<Rat, DataError> {
    match v {
        serde_json::Value::String(s) => parse_rat(s).map_err(|e| {
            DataError::InvariantViolation(format!("{what}: {e}"))
        }),
        serde_json::Value::Number(n) => {
            let text = n.to_string();
            parse_rat(&text).map_err(|_| {
                DataError::InvariantViolation(format!(
                    "{what}: expected an exact rational, got {text}"
                ))
            })
        }
        other => Err(DataError::InvariantViolation(format!(
            "{what}: expected a rational string, got {other}"
        ))),
    }
}

fn int_value(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_str(&n.to_string()).expect("integer literal is a JSON number"),
    )
}

fn rat_value(r: &Rat) -> serde_json::Value {
    serde_json::Value::String(r.to_string())
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

/// Load and validate a group dataset from a file.
pub fn load_group(path: &Path) -> Result<GroupData, DataError> {
    let text = std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.to_owned(),
        source,
    })?;
    load_group_from_str(&text, &path.display().to_string())
}

/// Load and validate a group dataset from JSON text. `origin` names the
/// source in error messages.
pub fn load_group_from_str(text: &str, origin: &str) -> Result<GroupData, DataError> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| DataError::Parse {
        path: origin.to_owned(),
        message: e.to_string(),
    })?;
    validate_group(file)
}

fn validate_group(file: GroupFile) -> Result<GroupData, DataError> {
    if file.name.is_empty() {
        return Err(DataError::InvariantViolation("group name is empty".into()));
    }
    let dim_v = uint_from_value(&file.dim_v, "dim_v")?;
    if dim_v.is_zero() {
        return Err(DataError::InvariantViolation("dim_v must be positive".into()));
    }
    let num_reflections = uint_from_value(&file.num_reflections, "num_reflections")?;
    if num_reflections.is_zero() {
        return Err(DataError::InvariantViolation(
            "num_reflections must be positive".into(),
        ));
    }
    let c_ref = rat_from_value(&file.c_ref, "c_ref")?;
    if c_ref.is_zero() {
        return Err(DataError::InvariantViolation("c_ref must be nonzero".into()));
    }

    let half_dim_v = Rat::new(BigInt::from(dim_v.clone()), BigInt::from(2));
    let mut irreps = Vec::with_capacity(file.irreps.len());
    let mut index = BTreeMap::new();
    for ir in &file.irreps {
        if ir.label.is_empty() {
            return Err(DataError::InvariantViolation("irrep label is empty".into()));
        }
        let label = IrrepLabel::new(ir.label.clone());
        let dim = uint_from_value(&ir.dim, &format!("dim of {label}"))?;
        if dim.is_zero() {
            return Err(DataError::InvariantViolation(format!(
                "dim of {label} must be positive"
            )));
        }
        let bound = BigInt::from(num_reflections.clone() * dim.clone());
        let source = match (&ir.refl_char_sum, &ir.h_override) {
            (Some(_), Some(_)) => {
                return Err(DataError::InvariantViolation(format!(
                    "{label} carries both refl_char_sum and h_override"
                )))
            }
            (Some(v), None) => {
                let a = int_from_value(v, &format!("refl_char_sum of {label}"))?;
                if a.abs() > bound {
                    return Err(DataError::InvariantViolation(format!(
                        "|refl_char_sum| of {label} exceeds num_reflections * dim = {bound}"
                    )));
                }
                Some(WeightSource::CharSum(a))
            }
            (None, Some(v)) => {
                let h_ref = rat_from_value(v, &format!("h_override of {label}"))?;
                // A(τ) = (dim V/2 − h)·dim τ / c_ref must be an integer.
                let a = (half_dim_v.clone() - &h_ref) * Rat::from_integer(BigInt::from(dim.clone()))
                    / &c_ref;
                if !a.is_integer() {
                    return Err(DataError::InvariantViolation(format!(
                        "h_override of {label} back-solves to non-integer character sum {a}"
                    )));
                }
                let a = a.to_integer();
                if a.abs() > bound {
                    return Err(DataError::InvariantViolation(format!(
                        "h_override of {label} back-solves to character sum {a} beyond \
                         num_reflections * dim = {bound}"
                    )));
                }
                Some(WeightSource::Override { h_ref, refl_sum: a })
            }
            (None, None) => None,
        };
        if index.insert(label.clone(), irreps.len()).is_some() {
            return Err(DataError::DuplicateLabel(label));
        }
        irreps.push(IrrepData { label, dim, source });
    }

    let mut sign_twist = BTreeMap::new();
    for (a, b) in &file.sign_twist {
        sign_twist.insert(IrrepLabel::new(a.clone()), IrrepLabel::new(b.clone()));
    }
    for (a, b) in &sign_twist {
        match sign_twist.get(b) {
            Some(back) if back == a => {}
            Some(back) => {
                return Err(DataError::InvariantViolation(format!(
                    "sign_twist is not an involution: {a} -> {b} -> {back}"
                )))
            }
            None => {
                return Err(DataError::InvariantViolation(format!(
                    "sign_twist is not closed: {a} -> {b} but {b} has no twist"
                )))
            }
        }
        // Invariants across a twist pair apply when both sides are listed.
        if let (Some(&ia), Some(&ib)) = (index.get(a), index.get(b)) {
            let (da, db) = (&irreps[ia], &irreps[ib]);
            if da.dim != db.dim {
                return Err(DataError::InvariantViolation(format!(
                    "twist pair {a}/{b} has mismatched dimensions {}/{}",
                    da.dim, db.dim
                )));
            }
            // antisymmetry is a character-level fact; it is only checked when
            // both sides supply the character sum itself, not a stated weight
            if let (Some(WeightSource::CharSum(sa)), Some(WeightSource::CharSum(sb))) =
                (da.source(), db.source())
            {
                if sa + sb != BigInt::zero() {
                    return Err(DataError::InvariantViolation(format!(
                        "character sums of twist pair {a}/{b} are not antisymmetric: {sa}, {sb}"
                    )));
                }
            }
        }
    }

    let inventory_complete_on = match &file.inventory_complete_on {
        Some([lo, hi]) => {
            let lo = rat_from_value(lo, "inventory_complete_on lower bound")?;
            let hi = rat_from_value(hi, "inventory_complete_on upper bound")?;
            if lo > hi {
                return Err(DataError::InvariantViolation(format!(
                    "inventory_complete_on interval ({lo}, {hi}) is backwards"
                )));
            }
            Some((lo, hi))
        }
        None => None,
    };

    Ok(GroupData {
        name: file.name,
        dim_v,
        num_reflections,
        c_ref,
        irreps,
        index,
        sign_twist,
        inventory_complete_on,
        irreps_complete: file.irreps_complete,
    })
}

/// Load and validate a decomposition-matrix file against a loaded group.
pub fn load_decomp(path: &Path, group: &GroupData) -> Result<DecompMatrix, DataError> {
    let text = std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.to_owned(),
        source,
    })?;
    load_decomp_from_str(&text, &path.display().to_string(), group)
}

/// Load a decomposition matrix from JSON text; see [`load_decomp`].
pub fn load_decomp_from_str(
    text: &str,
    origin: &str,
    group: &GroupData,
) -> Result<DecompMatrix, DataError> {
    let file: DecompFile = serde_json::from_str(text).map_err(|e| DataError::Parse {
        path: origin.to_owned(),
        message: e.to_string(),
    })?;
    if file.group != group.name() {
        return Err(DataError::GroupMismatch {
            expected: group.name().to_owned(),
            found: file.group,
        });
    }

    // A raw label resolves through the twist dictionary when the file is
    // twisted; the resolved label must be listed in the group.
    let resolve = |raw: &IrrepLabel| -> Result<IrrepLabel, DataError> {
        let resolved = if file.twisted_labels {
            group
                .twist_of(raw)
                .ok_or_else(|| DataError::MissingTwist(raw.clone()))?
                .clone()
        } else {
            raw.clone()
        };
        if group.irrep(&resolved).is_none() {
            return Err(DataError::UnknownLabel(resolved));
        }
        Ok(resolved)
    };

    let mut columns = BTreeMap::new();
    for (raw_col, col) in &file.columns {
        if raw_col.is_empty() {
            return Err(DataError::InvariantViolation("column label is empty".into()));
        }
        let col_label = IrrepLabel::new(raw_col.clone());
        resolve(&col_label)?;
        let mut entries = BTreeMap::new();
        for (raw_row, v) in &col.entries {
            let row = IrrepLabel::new(raw_row.clone());
            resolve(&row)?;
            let mult = uint_from_value(v, &format!("entry [{raw_row}, {raw_col}]"))?;
            entries.insert(row, mult);
        }
        match entries.get(&col_label) {
            Some(one) if one.is_one() => {}
            _ => return Err(DataError::BadDiagonal(col_label)),
        }
        let rows_complete_below = match &col.rows_complete_below {
            Some(v) => Some(rat_from_value(v, &format!("rows_complete_below of {raw_col}"))?),
            None => None,
        };
        columns.insert(
            col_label.clone(),
            DecompColumn::new(col_label, entries, rows_complete_below),
        );
    }

    Ok(DecompMatrix {
        group: file.group,
        twisted_labels: file.twisted_labels,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    pub(crate) const E8_GROUP: &str = include_str!("../data/e8_c13_paper.json");
    pub(crate) const E8_DECOMP: &str = include_str!("../data/e8_c13_decomp.json");
    const S2_GROUP: &str = include_str!("../data/s2_c12.json");
    const S2_DECOMP: &str = include_str!("../data/s2_c12_decomp.json");

    fn e8() -> GroupData {
        load_group_from_str(E8_GROUP, "e8").unwrap()
    }

    #[test]
    fn bundled_e8_loads() {
        let g = e8();
        assert_eq!(g.name(), "E8");
        assert_eq!(g.dim_v(), &BigUint::from(8u32));
        assert_eq!(g.num_reflections(), &BigUint::from(120u32));
        assert_eq!(g.c_ref(), &rat(1, 3));
        assert_eq!(g.irreps().len(), 10);
        let fifty = g.irrep(&"50_x".into()).unwrap();
        assert_eq!(fifty.dim(), &BigUint::from(50u32));
        // -12 at c_ref = 1/3 back-solves to A = (4+12)*50*3 = 2400
        assert_eq!(fifty.refl_sum(), Some(&BigInt::from(2400)));
        let sevenhundred = g.irrep(&"700_xx".into()).unwrap();
        assert_eq!(sevenhundred.refl_sum(), Some(&BigInt::from(8400)));
        assert_eq!(g.inventory_complete_on(), Some(&(rint(0), rint(2))));
        assert!(!g.irreps_complete());
        // candidates without printed data stay placeholders
        assert!(!g.irrep(&"28_x".into()).unwrap().has_weight_data());
    }

    #[test]
    fn bundled_s2_loads() {
        let g = load_group_from_str(S2_GROUP, "s2").unwrap();
        assert_eq!(g.dim_v(), &BigUint::from(1u32));
        assert!(g.irreps_complete());
        assert!(g.all_weights_known());
        assert_eq!(g.twist_of(&"triv".into()), Some(&"sign".into()));
        let m = load_decomp_from_str(S2_DECOMP, "s2d", &g).unwrap();
        assert!(!m.twisted_labels());
        assert!(m.column(&"triv".into()).is_some());
    }

    #[test]
    fn bundled_decomp_loads() {
        let g = e8();
        let m = load_decomp_from_str(E8_DECOMP, "e8d", &g).unwrap();
        assert!(m.twisted_labels());
        let col = m.column(&"50_x".into()).unwrap();
        assert_eq!(col.entry(&"50_x".into()), Some(&BigUint::from(1u32)));
        assert_eq!(col.entry(&"700_xx".into()), Some(&BigUint::from(1u32)));
        assert_eq!(col.entries().len(), 2);
        assert_eq!(col.rows_complete_below(), Some(&rint(2)));
    }

    #[test]
    fn minimal_single_irrep_group() {
        let text = r#"{
            "name": "toy", "dim_v": 8, "num_reflections": 120, "c_ref": "1/3",
            "irreps": [{"label": "1_x", "dim": 1, "refl_char_sum": 120}]
        }"#;
        let g = load_group_from_str(text, "toy").unwrap();
        assert_eq!(g.irreps().len(), 1);
        assert_eq!(g.irrep(&"1_x".into()).unwrap().refl_sum(), Some(&BigInt::from(120)));
    }

    #[test]
    fn broken_involution_rejected() {
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/2",
            "irreps": [
                {"label": "a", "dim": 1, "refl_char_sum": 3},
                {"label": "b", "dim": 1, "refl_char_sum": -3},
                {"label": "c", "dim": 1, "refl_char_sum": 0}
            ],
            "sign_twist": {"a": "b", "b": "c", "c": "a"}
        }"#;
        match load_group_from_str(text, "bad") {
            Err(DataError::InvariantViolation(msg)) => {
                assert!(msg.contains("involution"), "{msg}")
            }
            other => panic!("expected involution violation, got {other:?}"),
        }
    }

    #[test]
    fn open_ended_twist_rejected() {
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/2",
            "irreps": [{"label": "a", "dim": 1, "refl_char_sum": 3}],
            "sign_twist": {"a": "b"}
        }"#;
        match load_group_from_str(text, "bad") {
            Err(DataError::InvariantViolation(msg)) => assert!(msg.contains("closed"), "{msg}"),
            other => panic!("expected closure violation, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_label_rejected() {
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/2",
            "irreps": [
                {"label": "a", "dim": 1, "refl_char_sum": 3},
                {"label": "a", "dim": 1, "refl_char_sum": 3}
            ]
        }"#;
        assert!(matches!(
            load_group_from_str(text, "bad"),
            Err(DataError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn both_weight_fields_rejected() {
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/2",
            "irreps": [{"label": "a", "dim": 1, "refl_char_sum": 3, "h_override": "0"}]
        }"#;
        assert!(matches!(
            load_group_from_str(text, "bad"),
            Err(DataError::InvariantViolation(_))
        ));
    }

    #[test]
    fn char_sum_bound_enforced() {
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/2",
            "irreps": [{"label": "a", "dim": 2, "refl_char_sum": 7}]
        }"#;
        assert!(matches!(
            load_group_from_str(text, "bad"),
            Err(DataError::InvariantViolation(_))
        ));
    }

    #[test]
    fn non_integral_backsolve_rejected() {
        // A = (1 - 1/5)*1 / (1/3) = 12/5, not an integer
        let text = r#"{
            "name": "bad", "dim_v": 2, "num_reflections": 3, "c_ref": "1/3",
            "irreps": [{"label": "a", "dim": 1, "h_override": "1/5"}]
        }"#;
        assert!(matches!(
            load_group_from_str(text, "bad"),
            Err(DataError::InvariantViolation(_))
        ));
    }

    #[test]
    fn twist_char_antisymmetry_enforced() {
        let text = r#"{
            "name": "bad", "dim_v": 1, "num_reflections": 1, "c_ref": "1/2",
            "irreps": [
                {"label": "triv", "dim": 1, "refl_char_sum": 1},
                {"label": "sign", "dim": 1, "refl_char_sum": 1}
            ],
            "sign_twist": {"triv": "sign", "sign": "triv"}
        }"#;
        match load_group_from_str(text, "bad") {
            Err(DataError::InvariantViolation(msg)) => {
                assert!(msg.contains("antisymmetric"), "{msg}")
            }
            other => panic!("expected antisymmetry violation, got {other:?}"),
        }
    }

    #[test]
    fn missing_diagonal_rejected() {
        let g = e8();
        let text = r#"{
            "group": "E8", "twisted_labels": true,
            "columns": {"50_x": {"entries": {"700_xx": 1}, "rows_complete_below": "2"}}
        }"#;
        assert!(matches!(
            load_decomp_from_str(text, "d", &g),
            Err(DataError::BadDiagonal(_))
        ));
    }

    #[test]
    fn unknown_row_rejected() {
        let g = e8();
        let text = r#"{
            "group": "E8", "twisted_labels": false,
            "columns": {"50_x": {"entries": {"50_x": 1, "999_q": 1}}}
        }"#;
        assert!(matches!(
            load_decomp_from_str(text, "d", &g),
            Err(DataError::UnknownLabel(_))
        ));
    }

    #[test]
    fn missing_twist_rejected() {
        let g = e8();
        // 1_x has no twist entry in the bundled dictionary
        let text = r#"{
            "group": "E8", "twisted_labels": true,
            "columns": {"1_x": {"entries": {"1_x": 1}}}
        }"#;
        assert!(matches!(
            load_decomp_from_str(text, "d", &g),
            Err(DataError::MissingTwist(_))
        ));
    }

    #[test]
    fn group_mismatch_rejected() {
        let g = e8();
        let text = r#"{"group": "E7", "twisted_labels": false, "columns": {}}"#;
        assert!(matches!(
            load_decomp_from_str(text, "d", &g),
            Err(DataError::GroupMismatch { .. })
        ));
    }

    #[test]
    fn negative_entry_rejected() {
        let g = e8();
        let text = r#"{
            "group": "E8", "twisted_labels": false,
            "columns": {"50_x": {"entries": {"50_x": 1, "700_xx": -1}}}
        }"#;
        assert!(matches!(
            load_decomp_from_str(text, "d", &g),
            Err(DataError::InvariantViolation(_))
        ));
    }

    #[test]
    fn group_round_trip() {
        let g = e8();
        let again = load_group_from_str(&g.to_json(), "round-trip").unwrap();
        assert_eq!(g, again);
        let s2 = load_group_from_str(S2_GROUP, "s2").unwrap();
        assert_eq!(s2, load_group_from_str(&s2.to_json(), "round-trip").unwrap());
    }

    #[test]
    fn huge_integers_survive() {
        let big = "9".repeat(40);
        let text = format!(
            r#"{{
                "name": "big", "dim_v": 1, "num_reflections": {big}, "c_ref": "1/2",
                "irreps": [{{"label": "t", "dim": 1, "refl_char_sum": {big}}}]
            }}"#
        );
        let g = load_group_from_str(&text, "big").unwrap();
        assert_eq!(
            g.irrep(&"t".into()).unwrap().refl_sum().unwrap().to_string(),
            big
        );
        let again = load_group_from_str(&g.to_json(), "round-trip").unwrap();
        assert_eq!(g, again);
    }
}
