//! Exact-arithmetic engine for the finite-dimensionality obstruction on
//! lowest-weight modules over rational Cherednik algebras.
//!
//! The crate ingests a group's representation data and decomposition-matrix
//! columns, computes exact rational lowest weights, assembles truncated
//! graded characters of Verma and simple modules, and applies the graded
//! symmetry obstruction: a finite-dimensional module must have graded
//! dimensions symmetric about eigenvalue 0, so any certified asymmetry
//! proves infinite-dimensionality.
//!
//! - [`repdata`]: datasets, validation, JSON format
//! - [`weights`]: exact lowest weights and window queries
//! - [`gseries`]: truncated graded series with certified windows
//! - [`decomp`]: column analysis and Verma-basis expansion
//! - [`findim`]: the symmetry test and classification closing
//!
//! All data is immutable after loading and every operation is a pure
//! function, so values can be shared and sent across threads freely.

pub mod decomp;
pub mod findim;
pub mod gseries;
pub mod rat;
pub mod repdata;
pub mod weights;

pub use decomp::{expansion, hom_report, resolve_labels, GrothExpansion, HomReport};
pub use findim::{
    analyze, classify, simple_character, sl2_symmetry_test, CandidateStatus, FindimOutcome,
    Verdict,
};
pub use gseries::{combine, poly_coeff, verma_series, GradedSeries};
pub use rat::{parse_rat, Rat, UpperBound};
pub use repdata::{
    load_decomp, load_group, DecompColumn, DecompMatrix, GroupData, IrrepData, IrrepLabel,
};
pub use weights::{h_weight, labels_in_window, WindowQuery};

#[cfg(test)]
mod concurrency {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn shared_types_are_send_and_sync() {
        assert_send_sync::<crate::GroupData>();
        assert_send_sync::<crate::DecompMatrix>();
        assert_send_sync::<crate::GradedSeries>();
        assert_send_sync::<crate::GrothExpansion>();
        assert_send_sync::<crate::Verdict>();
    }
}
