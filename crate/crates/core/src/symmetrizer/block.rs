use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::sym::{Word};

/// The words of one orbit, lexicographically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBasis {
    degree: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl OrbitBasis {
    /// The orbit of `rep`: all words of the same length and parity count.
    pub fn of(rep: &Word) -> Self {
        let c = rep.parity_count();
        let words: Vec<Word> = Word::all(rep.len()).filter(|w| w.parity_count() == c).collect();
        let index = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        OrbitBasis {
            degree: rep.len(),
            words,
            index,
        }
    }

    /// One basis per orbit of words of length `n`, ordered by parity count.
    pub fn all(n: usize) -> Vec<OrbitBasis> {
        let mut reps: Vec<Option<Word>> = vec![None; n + 1];
        for w in Word::all(n) {
            reps[w.parity_count()].get_or_insert(w);
        }
        reps.into_iter().flatten().map(|w| OrbitBasis::of(&w)).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}

/// A square block of the symmetrizer; `entries[row][col]` with rows
/// indexed by targets `y` and columns by sources `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix<S> {
    basis: OrbitBasis,
    entries: Vec<Vec<S>>,
}

impl<S: Scalar> BlockMatrix<S> {
    pub fn new(basis: OrbitBasis, entries: Vec<Vec<S>>) -> Self {
        debug_assert_eq!(entries.len(), basis.len());
        debug_assert!(entries.iter().all(|r| r.len() == basis.len()));
        BlockMatrix { basis, entries }
    }

    pub fn basis(&self) -> &OrbitBasis {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<S>] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `F~(x|y)`, zero outside the orbit.
    pub fn entry(&self, x: &Word, y: &Word) -> S {
        match (self.basis.position(x), self.basis.position(y)) {
            (Some(c), Some(r)) => self.entries[r][c].clone(),
            _ => S::zero(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BlockMatrix<T> {
        BlockMatrix {
            basis: self.basis.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn rank(&self) -> Result<usize> {
        rank_of_rows(self.entries.clone())
    }
}

/// Plain-text dump: a header of column words, then one line per row word.
impl<S: Scalar> fmt::Display for BlockMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        let label_w = self.basis.degree.max(1);
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(std::iter::once(label_w))
            .max()
            .unwrap_or(1);
        write!(f, "{:label_w$}", "")?;
        for x in self.basis.words() {
            write!(f, "  {:>width$}", x.to_string())?;
        }
        writeln!(f)?;
        for (y, row) in self.basis.words().iter().zip(&cells) {
            write!(f, "{:label_w$}", y.to_string())?;
            for c in row {
                write!(f, "  {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Rank over a field by fraction-free (Bareiss) elimination.
///
/// Each update is `M[i][j] <- (p M[i][j] - M[i][k] M[k][j]) / p_prev`; over
/// a field the division is multiplication by the inverse of the previous
/// pivot. Columns without a pivot are skipped.
pub fn rank_of_rows<S: Scalar>(mut m: Vec<Vec<S>>) -> Result<usize> {
    if !S::IS_FIELD {
        return Err(Error::UnsupportedMode("rank needs field coefficients"));
    }
    m.retain(|r| r.iter().any(|c| !c.is_zero()));
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev_inv = S::one();
    let mut rank = 0;
    for k in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][k].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pivot = pivot_row[k].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[k].clone();
            for j in k + 1..cols {
                let own = &row[j];
                let cross = !factor.is_zero() && !pivot_row[j].is_zero();
                if own.is_zero() && !cross {
                    continue;
                }
                let mut v = pivot.clone() * own;
                if cross {
                    v = v - factor.clone() * &pivot_row[j];
                }
                row[j] = v * &prev_inv;
            }
            row[k] = S::zero();
        }
        prev_inv = pivot
            .inverse()
            .expect("a nonzero pivot is invertible in a field");
        rank += 1;
    }
    Ok(rank)
}
