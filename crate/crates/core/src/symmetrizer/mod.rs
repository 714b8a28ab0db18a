//! Braided symmetrizers, their orbit blocks and ranks.

mod block;
mod brute;
mod engine;
mod profile;

pub use block::{rank_of_rows, BlockMatrix, OrbitBasis};
pub use brute::{
    bruteforce_column, tilde_f_bruteforce, tilde_f_diagonal_e1, tilde_f_k, tilde_f_monomial_counts,
};
pub use engine::{column_entry, symmetrizer_block, tilde_f, Column, SymmetrizerEngine};
pub use profile::{
    graded_dim, nichols_dimension, nichols_dimension_with, GradedProfile, ProfileStatus,
    DEFAULT_DEGREE_CAP,
};

use crate::error::Result;
use crate::scalars::Scalar;

/// Exact rank of a block; requires field coefficients.
pub fn rank<S: Scalar>(m: &BlockMatrix<S>) -> Result<usize> {
    m.rank()
}
