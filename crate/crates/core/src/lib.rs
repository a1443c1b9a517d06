//! Hilbert series of Artinian monomial algebras and the weak and strong
//! Lefschetz properties of monomial almost complete intersections.
//!
//! Verdicts come from two independent sources: exact ranks of the
//! multiplication maps (see [`oracle`]) and closed-form rules for two families
//! of almost complete intersections (see [`classify`]). [`verify`] compares
//! them over parameter grids.

pub mod analysis;
pub mod classify;
pub mod error;
pub mod exec;
pub mod maci;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod series;
pub mod verify;

pub use analysis::{
    is_almost_centered, is_symmetric, reflecting_degree, two_var_profile, TwoVarProfile,
};
pub use classify::{
    classify, classify_support_two, csm_decomposition, is_symmetric_maci, slp_symmetric,
};
pub use classify::{ClassificationVerdict, CsmDecomposition, Rule};
pub use error::{Error, Result};
pub use exec::Execution;
pub use maci::MaciSpec;
pub use matrix::{matrix_rank, IntMatrix};
pub use monomial::{Monomial, MonomialIdeal};
pub use oracle::{
    lefschetz_report, multiplication_matrix, recursion_full_rank, LefschetzReport, LinearForm,
    MapRecord,
};
pub use parse::{parse_ideal, render_ideal};
pub use series::{hilbert_series, HilbertSeries};
pub use verify::{cross_verify, Family, Grid};
