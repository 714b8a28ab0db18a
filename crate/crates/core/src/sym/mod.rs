//! Words over `{1, 2}`, the symmetric-group action on them and the
//! combinatorics of the sets `F(x|y)`.

mod action;
mod partition;
mod perm;
mod tgroup;
mod word;

pub use action::{act, act_generator, fset, fset_scan, orbit, FSet};
pub use partition::{named_representatives, orbit_partition, OrbitInfo};
pub use perm::{Perm, MAX_PERM_DEGREE};
pub use tgroup::{ek_table, sl, subgroup_tgen, tl, EkRow, EkTable, TGroup};
pub use word::{Word, MAX_WORD_LEN};

/// Enumeration caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for scans over all of `S_n`.
    pub full_scan: usize,
    /// Largest `n` for operations that only walk the subgroup generated by
    /// the `t_i`.
    pub subgroup: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            full_scan: 10,
            subgroup: 13,
        }
    }
}
