use std::collections::{BTreeSet, VecDeque};

use super::{Limits, Perm, TGroup, Word};
use crate::error::{Error, Result};

/// The action of `S_n` on words induced by `s_i . 11 = 22`, `s_i . 22 = 11`,
/// `s_i . 12 = 12`, `s_i . 21 = 21` at positions `(i, i+1)`.
///
/// Every generator moves two letters past each other and flips both, so the
/// letter landing at `p(j)` is `w_j`, flipped when `p(j) - j` is odd. That
/// makes the result independent of the chosen decomposition of `p`.
pub fn act(p: &Perm, w: &Word) -> Result<Word> {
    let n = p.degree();
    if w.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let mut out = [0u8; super::MAX_PERM_DEGREE];
    for j in 0..n {
        let target = p.apply(j);
        let l = w.letter(j);
        out[target] = if (target + j) % 2 == 1 { 3 - l } else { l };
    }
    Word::new(&out[..n])
}

/// Applies the generator `s_i` (1-based) to a word.
pub fn act_generator(i: usize, w: &Word) -> Word {
    debug_assert!(i >= 1 && i < w.len());
    if w.letter(i - 1) == w.letter(i) {
        w.flip_pair(i - 1)
    } else {
        *w
    }
}

/// Orbit of `w` under `S_n`, by breadth-first closure under the generators,
/// in lexicographic order.
pub fn orbit(w: &Word) -> Vec<Word> {
    let mut seen = BTreeSet::from([*w]);
    let mut queue = VecDeque::from([*w]);
    while let Some(x) = queue.pop_front() {
        for i in 1..x.len() {
            let y = act_generator(i, &x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// `F(x|y) = { sigma : sigma . x = y }` with its members sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSet {
    pub source: Word,
    pub target: Word,
    pub members: Vec<Perm>,
}

impl FSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Exact enumeration of `F(x|y)`.
///
/// For `x = y` in `{1^n, 2^n}` the set is the subgroup generated by the
/// `t_i`, reachable up to `limits.subgroup`; otherwise `S_n` is scanned,
/// up to `limits.full_scan`.
pub fn fset(x: &Word, y: &Word, limits: &Limits) -> Result<FSet> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: y.len(),
        });
    }
    let constant = *x == Word::repeat(1, n) || *x == Word::repeat(2, n);
    let mut members = if x == y && constant {
        if n > limits.subgroup {
            return Err(Error::CapExceeded {
                n,
                cap: limits.subgroup,
            });
        }
        TGroup::new(n).elements().to_vec()
    } else {
        fset_scan(x, y, limits)?
    };
    members.sort();
    Ok(FSet {
        source: *x,
        target: *y,
        members,
    })
}

/// `F(x|y)` by scanning every permutation of `S_n`.
pub fn fset_scan(x: &Word, y: &Word, limits: &Limits) -> Result<Vec<Perm>> {
    let n = x.len();
    if n > limits.full_scan {
        return Err(Error::CapExceeded {
            n,
            cap: limits.full_scan,
        });
    }
    if x.parity_count() != y.parity_count() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in Perm::all(n) {
        if act(&p, x)? == *y {
            out.push(p);
        }
    }
    Ok(out)
}
