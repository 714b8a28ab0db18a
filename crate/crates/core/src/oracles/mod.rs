//! Closed forms for orbit sizes, `F~_k`, `E_{k,s}^n` and dimensions, and a
//! suite checking them against the engines.

mod closed_forms;
mod verify;

pub use closed_forms::{
    cf_bminus1_tilde, cf_dimension, cf_e, cf_longest_element, cf_orbit_size,
    cf_qfactorial_product, cf_tilde_fk, BMinusOneVariant, DimensionCase, LengthParity,
};
pub use verify::{
    summary, verify_all, verify_with, ClosedFormReport, Counterexample, Perturbation,
    ReportStatus, VerifyConfig,
};
