use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::{BlockMatrix, OrbitBasis};
use crate::braiding::{step, BraidingParams};
use crate::error::{Error, Result};
use crate::scalars::{Monomial, Scalar, Var};
use crate::sym::{Word, MAX_WORD_LEN};

/// `S_n(v_x)` as a sparse vector sorted by word, zero coefficients removed.
pub type Column<S> = Vec<(Word, S)>;

/// Looks up the coefficient of `v_y` in a column.
pub fn column_entry<S: Scalar>(column: &Column<S>, y: &Word) -> S {
    column
        .binary_search_by(|(w, _)| w.cmp(y))
        .map(|i| column[i].1.clone())
        .unwrap_or_else(|_| S::zero())
}

/// Computes `S_n(v_x)` through
/// `S_n = S_{n-1,1} (S_{n-1} (x) id)` and
/// `S_{n-1,1} = id + c_{n-1} + c_{n-2} c_{n-1} + ... + c_1 ... c_{n-1}`,
/// memoizing the image of every prefix.
///
/// Safe to share across threads. Memoized columns are never invalidated.
pub struct SymmetrizerEngine<S> {
    params: BraidingParams<S>,
    memo: RwLock<HashMap<Word, Arc<Column<S>>>>,
    monomials: RwLock<HashMap<Monomial, S>>,
}

impl<S: Scalar> SymmetrizerEngine<S> {
    pub fn new(params: BraidingParams<S>) -> Self {
        SymmetrizerEngine {
            params,
            memo: RwLock::new(HashMap::new()),
            monomials: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &BraidingParams<S> {
        &self.params
    }

    fn monomial(&self, m: Monomial) -> S {
        if let Some(v) = self.monomials.read().expect("monomial cache poisoned").get(&m) {
            return v.clone();
        }
        let v = self.params.monomial(m);
        self.monomials
            .write()
            .expect("monomial cache poisoned")
            .entry(m)
            .or_insert(v)
            .clone()
    }

    fn cached(&self, x: &Word) -> Option<Arc<Column<S>>> {
        self.memo.read().expect("column memo poisoned").get(x).cloned()
    }

    /// `S_n(v_x)`.
    pub fn column(&self, x: &Word) -> Arc<Column<S>> {
        if x.len() <= 1 {
            return Arc::new(vec![(*x, S::one())]);
        }
        if let Some(c) = self.cached(x) {
            return c;
        }
        let prev = self.column(&x.prefix(x.len() - 1));
        let col = Arc::new(self.extend(&prev, x.last().expect("nonempty")));
        self.memo
            .write()
            .expect("column memo poisoned")
            .entry(*x)
            .or_insert(col)
            .clone()
    }

    /// `S_{n-1,1}(prev (x) v_letter)`.
    fn extend(&self, prev: &Column<S>, letter: u8) -> Column<S> {
        // Sums are grouped by the picked-up monomial first so that each
        // distinct (word, monomial) costs one multiplication.
        let mut grouped: HashMap<(Word, Monomial), S> = HashMap::new();
        let mut add = |w: Word, m: Monomial, c: &S| match grouped.get_mut(&(w, m)) {
            Some(slot) => *slot = std::mem::replace(slot, S::zero()) + c,
            None => {
                grouped.insert((w, m), c.clone());
            }
        };
        for (u, c) in prev {
            let mut w = u.push(letter);
            let mut m = Monomial::ONE;
            add(w, m, c);
            for i in (1..w.len()).rev() {
                let (next, var) = step(i, &w);
                match var {
                    Var::A => m.a += 1,
                    Var::B => m.b += 1,
                    Var::E => m.e += 1,
                }
                w = next;
                add(w, m, c);
            }
        }
        let mut out: BTreeMap<Word, S> = BTreeMap::new();
        for ((w, m), c) in grouped {
            if c.is_zero() {
                continue;
            }
            let term = c * &self.monomial(m);
            match out.get_mut(&w) {
                Some(slot) => *slot = std::mem::replace(slot, S::zero()) + &term,
                None => {
                    out.insert(w, term);
                }
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Memoizes `S_k(v_x)` for every word of every length `k <= n`, one
    /// length at a time, each length in parallel over words.
    pub fn prepare_degree(&self, n: usize) {
        for k in 2..=n.min(MAX_WORD_LEN) {
            let missing: Vec<Word> = {
                let memo = self.memo.read().expect("column memo poisoned");
                Word::all(k).filter(|w| !memo.contains_key(w)).collect()
            };
            if missing.is_empty() {
                continue;
            }
            let computed: Vec<(Word, Arc<Column<S>>)> = missing
                .par_iter()
                .map(|x| {
                    let prev = self.column(&x.prefix(k - 1));
                    (*x, Arc::new(self.extend(&prev, x.last().expect("nonempty"))))
                })
                .collect();
            self.memo
                .write()
                .expect("column memo poisoned")
                .extend(computed);
        }
    }

    /// Drops memoized columns of length below `n`.
    pub fn release_below(&self, n: usize) {
        self.memo
            .write()
            .expect("column memo poisoned")
            .retain(|w, _| w.len() >= n);
    }

    /// `F~(x|y)`: the coefficient of `v_y` in `S_n(v_x)`.
    pub fn tilde_f(&self, x: &Word, y: &Word) -> Result<S> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: y.len(),
            });
        }
        if x.parity_count() != y.parity_count() {
            return Ok(S::zero());
        }
        Ok(column_entry(&self.column(x), y))
    }

    /// The block of `S_n` on the orbit of `rep`, entry `(y, x) = F~(x|y)`.
    pub fn block(&self, rep: &Word) -> BlockMatrix<S> {
        let basis = OrbitBasis::of(rep);
        let columns: Vec<Arc<Column<S>>> = basis.words().iter().map(|x| self.column(x)).collect();
        let entries = basis
            .words()
            .iter()
            .map(|y| columns.iter().map(|c| column_entry(c, y)).collect())
            .collect();
        BlockMatrix::new(basis, entries)
    }
}

/// The block of `S_n` on the orbit of `rep`.
pub fn symmetrizer_block<S: Scalar>(
    n: usize,
    rep: &Word,
    params: &BraidingParams<S>,
) -> Result<BlockMatrix<S>> {
    if n == 0 || rep.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: rep.len(),
        });
    }
    Ok(SymmetrizerEngine::new(params.clone()).block(rep))
}

/// `F~(x|y)` computed by the recursion.
pub fn tilde_f<S: Scalar>(x: &Word, y: &Word, params: &BraidingParams<S>) -> Result<S> {
    SymmetrizerEngine::new(params.clone()).tilde_f(x, y)
}
