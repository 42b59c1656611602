//! Exact lowest weights: the scalar by which the grading element acts on
//! the lowest-weight space of a Verma module, and window queries over the
//! weight inventory.
//!
//! For an irreducible τ with character sum A(τ) = Σ_s τ(s) over all
//! reflections, the lowest weight at parameter c is
//!
//!   h_c(τ) = dim V / 2 − c · A(τ) / dim τ
//!
//! computed in exact rational arithmetic. Irreps whose weight was stated
//! directly at the reference parameter had A(τ) back-solved at load time,
//! so the same formula reproduces the stated value verbatim at c = c_ref
//! and extends it to every other c.

use crate::rat::Rat;
use crate::repdata::{GroupData, IrrepLabel};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("unknown label {0}")]
    UnknownLabel(IrrepLabel),
    #[error("{0} carries no character data and no stated weight")]
    MissingWeightData(IrrepLabel),
}

/// The lowest weight h_c(τ), exactly.
pub fn h_weight(group: &GroupData, c: &Rat, tau: &IrrepLabel) -> Result<Rat, WeightError> {
    let irrep = group
        .irrep(tau)
        .ok_or_else(|| WeightError::UnknownLabel(tau.clone()))?;
    let refl_sum = irrep
        .refl_sum()
        .ok_or_else(|| WeightError::MissingWeightData(tau.clone()))?;
    let half_dim_v = Rat::new(BigInt::from(group.dim_v().clone()), BigInt::from(2));
    let dim = Rat::from_integer(BigInt::from(irrep.dim().clone()));
    Ok(half_dim_v - c * Rat::from_integer(refl_sum.clone()) / dim)
}

/// Result of a window query over the weight inventory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowQuery {
    /// Labels with lo < h_c ≤ hi, ascending by (h, label name).
    pub labels: Vec<(IrrepLabel, Rat)>,
    /// True when the result is certified to list *every* irreducible of the
    /// group in the window, not merely every listed one.
    pub exhaustive: bool,
}

/// All listed labels whose weight falls in the half-open interval (lo, hi].
///
/// Labels without weight data are skipped; the result is flagged exhaustive
/// only when an inventory assertion covers their absence: either the group
/// lists all its irreps with data, or the query interval sits inside
/// `inventory_complete_on` and the query runs at the reference parameter
/// the assertion was made at.
pub fn labels_in_window(group: &GroupData, c: &Rat, lo: &Rat, hi: &Rat) -> WindowQuery {
    let mut labels = Vec::new();
    if lo < hi {
        for irrep in group.irreps() {
            if irrep.refl_sum().is_none() {
                continue;
            }
            let h = h_weight(group, c, irrep.label()).expect("listed irrep with data");
            if &h > lo && &h <= hi {
                labels.push((irrep.label().clone(), h));
            }
        }
    }
    labels.sort_by(|(la, ha), (lb, hb)| ha.cmp(hb).then_with(|| la.cmp(lb)));

    let exhaustive = if lo >= hi {
        true // empty interval, vacuously complete
    } else if group.irreps_complete() && group.all_weights_known() {
        true
    } else if c == group.c_ref() {
        match group.inventory_complete_on() {
            Some((inv_lo, inv_hi)) => lo >= inv_lo && hi < inv_hi,
            None => false,
        }
    } else {
        false
    };

    WindowQuery { labels, exhaustive }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use crate::repdata::load_group_from_str;

    fn e8() -> GroupData {
        load_group_from_str(include_str!("../data/e8_c13_paper.json"), "e8").unwrap()
    }

    fn s2() -> GroupData {
        load_group_from_str(include_str!("../data/s2_c12.json"), "s2").unwrap()
    }

    #[test]
    fn paper_weights() {
        let g = e8();
        let c = rat(1, 3);
        assert_eq!(h_weight(&g, &c, &"50_x".into()).unwrap(), rint(-12));
        assert_eq!(h_weight(&g, &c, &"700_xx".into()).unwrap(), rint(0));
        // trivial character: τ(s) = 1 at every reflection
        assert_eq!(h_weight(&g, &c, &"1_x".into()).unwrap(), rint(-36));
        // reflection representation: trace dim V − 2 = 6, A = 720
        assert_eq!(h_weight(&g, &c, &"8_z".into()).unwrap(), rint(-26));
    }

    #[test]
    fn unknown_and_missing_data() {
        let g = e8();
        let c = rat(1, 3);
        assert_eq!(
            h_weight(&g, &c, &"bogus".into()),
            Err(WeightError::UnknownLabel("bogus".into()))
        );
        assert_eq!(
            h_weight(&g, &c, &"28_x".into()),
            Err(WeightError::MissingWeightData("28_x".into()))
        );
    }

    #[test]
    fn s2_weights() {
        let g = s2();
        let c = rat(1, 2);
        assert_eq!(h_weight(&g, &c, &"triv".into()).unwrap(), rint(0));
        assert_eq!(h_weight(&g, &c, &"sign".into()).unwrap(), rint(1));
    }

    #[test]
    fn affinity_in_c() {
        // h_{2c} − dim V/2 = 2 (h_c − dim V/2), for data from either source
        let g = e8();
        let half = rint(4);
        for label in ["1_x", "8_z", "50_x", "700_xx"] {
            let h1 = h_weight(&g, &rat(1, 3), &label.into()).unwrap();
            let h2 = h_weight(&g, &rat(2, 3), &label.into()).unwrap();
            assert_eq!(h2 - &half, (h1 - &half) * rint(2));
        }
    }

    #[test]
    fn empty_window_above_zero_is_exhaustive() {
        let g = e8();
        let q = labels_in_window(&g, &rat(1, 3), &rint(0), &rint(1));
        assert!(q.labels.is_empty());
        assert!(q.exhaustive);
    }

    #[test]
    fn window_down_to_minus_one_not_exhaustive() {
        let g = e8();
        let q = labels_in_window(&g, &rat(1, 3), &rint(-1), &rint(0));
        assert_eq!(q.labels, vec![("700_xx".into(), rint(0))]);
        assert!(!q.exhaustive);
    }

    #[test]
    fn degenerate_window_is_empty() {
        let g = e8();
        let q = labels_in_window(&g, &rat(1, 3), &rint(5), &rint(5));
        assert!(q.labels.is_empty());
        assert!(q.exhaustive);
    }

    #[test]
    fn complete_group_is_exhaustive_everywhere() {
        let g = s2();
        let q = labels_in_window(&g, &rat(1, 2), &rint(-10), &rint(10));
        assert!(q.exhaustive);
        assert_eq!(
            q.labels,
            vec![("triv".into(), rint(0)), ("sign".into(), rint(1))]
        );
        // also away from c_ref: the list itself is complete
        let q = labels_in_window(&g, &rat(1, 3), &rint(-10), &rint(10));
        assert!(q.exhaustive);
    }

    #[test]
    fn exhaustive_needs_reference_parameter() {
        let g = e8();
        let q = labels_in_window(&g, &rat(2, 3), &rint(0), &rint(1));
        assert!(q.labels.is_empty());
        assert!(!q.exhaustive, "inventory assertion only holds at c_ref");
    }

    #[test]
    fn window_boundary_at_inventory_edge() {
        let g = e8();
        // (0, 2] reaches the uncertified endpoint 2 itself
        let q = labels_in_window(&g, &rat(1, 3), &rint(0), &rint(2));
        assert!(!q.exhaustive);
    }

    #[test]
    fn sorted_by_weight_then_name() {
        let text = r#"{
            "name": "toy", "dim_v": 2, "num_reflections": 4, "c_ref": "1/2",
            "irreps": [
                {"label": "b", "dim": 1, "refl_char_sum": 2},
                {"label": "a", "dim": 1, "refl_char_sum": 2},
                {"label": "z", "dim": 1, "refl_char_sum": 4}
            ]
        }"#;
        let g = load_group_from_str(text, "toy").unwrap();
        let q = labels_in_window(&g, &rat(1, 2), &rint(-5), &rint(5));
        // h(z) = 1 - 2 = -1, h(a) = h(b) = 0: ties break by name
        assert_eq!(
            q.labels,
            vec![
                ("z".into(), rint(-1)),
                ("a".into(), rint(0)),
                ("b".into(), rint(0))
            ]
        );
    }
}
