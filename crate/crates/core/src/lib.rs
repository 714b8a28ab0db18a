//! Exact computations for the Nichols algebra of the two-dimensional braided
//! vector space `V_abe`.
//!
//! The braiding on `V = k v1 + k v2` is monomial:
//!
//! ```text
//! c(v1 v1) = a v2 v2    c(v1 v2) = b v1 v2
//! c(v2 v1) = b v2 v1    c(v2 v2) = e v1 v1
//! ```
//!
//! so every lifted permutation maps a basis word to a scalar multiple of a
//! single basis word. The symmetrizer `S_n` is therefore block diagonal with
//! one block per orbit of the symmetric group acting on words over `{1, 2}`,
//! and the graded dimensions of the Nichols algebra are the ranks of those
//! blocks.
//!
//! Modules, bottom-up:
//!
//! * [`scalars`]: rationals, sparse polynomials in `a, b, e`, cyclotomic
//!   fields, a quadratic extension and literal parsing.
//! * [`sym`]: words, permutations, orbits, the sets `F(x|y)`, the subgroup
//!   generated by `t_i = s_i s_{i+1} s_i` and the `E_{k,s}^n` tables.
//! * [`braiding`]: the braiding operators `c_i`, the Matsumoto lift and the
//!   diagonal-type analysis.
//! * [`symmetrizer`]: orbit blocks of `S_n`, exact rank and the dimension
//!   driver.
//! * [`oracles`]: closed forms for orbit sizes, `F_k` polynomials, `E`
//!   numbers and dimensions, plus a verification suite against the engines.

pub mod braiding;
pub mod error;
pub mod oracles;
pub mod scalars;
pub mod sym;
pub mod symmetrizer;

pub use error::{Error, Result};
