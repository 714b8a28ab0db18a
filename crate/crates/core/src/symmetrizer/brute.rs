use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::{Column, SymmetrizerEngine};
use crate::braiding::{phi_exponents, BraidingParams};
use crate::error::{Error, Result};
use crate::scalars::{Monomial, MultiPoly, Scalar, Var};
use crate::sym::{fset, Limits, Perm, Word};

/// How often each monomial `a^i b^j e^k` occurs among `Phi_p(v_x)` for
/// `p` in `F(x|y)`.
pub fn tilde_f_monomial_counts(
    x: &Word,
    y: &Word,
    limits: &Limits,
) -> Result<BTreeMap<Monomial, u64>> {
    let set = fset(x, y, limits)?;
    let mut counts = BTreeMap::new();
    for p in &set.members {
        let (w, m) = phi_exponents(p, x)?;
        debug_assert_eq!(&w, y);
        *counts.entry(m).or_insert(0) += 1;
    }
    Ok(counts)
}

fn evaluate_counts<'a, S: Scalar>(
    params: &BraidingParams<S>,
    counts: impl IntoIterator<Item = (&'a Monomial, &'a u64)>,
) -> S {
    counts.into_iter().fold(S::zero(), |acc, (m, &c)| {
        acc + S::from_int(c as i64) * &params.monomial(*m)
    })
}

/// `F~(x|y) = sum over F(x|y) of Phi_p(v_x)`, by enumeration.
pub fn tilde_f_bruteforce<S: Scalar>(
    x: &Word,
    y: &Word,
    params: &BraidingParams<S>,
    limits: &Limits,
) -> Result<S> {
    Ok(evaluate_counts(params, &tilde_f_monomial_counts(x, y, limits)?))
}

/// `S_n(v_x)` by one pass over all of `S_n`.
pub fn bruteforce_column<S: Scalar>(
    x: &Word,
    params: &BraidingParams<S>,
    limits: &Limits,
) -> Result<Column<S>> {
    let n = x.len();
    if n > limits.full_scan {
        return Err(Error::CapExceeded {
            n,
            cap: limits.full_scan,
        });
    }
    let mut counts: BTreeMap<Word, BTreeMap<Monomial, u64>> = BTreeMap::new();
    for p in Perm::all(n) {
        let (w, m) = phi_exponents(&p, x)?;
        *counts.entry(w).or_default().entry(m).or_insert(0) += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(w, c)| (w, evaluate_counts(params, &c)))
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

fn diagonal_e1_cache() -> &'static Mutex<HashMap<usize, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `F~(1^n|1^n)` in formal `a, b` with `e = 1`, memoized per `n`.
pub fn tilde_f_diagonal_e1(n: usize) -> MultiPoly {
    if let Some(p) = diagonal_e1_cache().lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let x = Word::repeat(1, n);
    let p = SymmetrizerEngine::new(BraidingParams::symbolic_e1())
        .tilde_f(&x, &x)
        .expect("equal lengths");
    diagonal_e1_cache()
        .lock()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

/// `F~_k(1^n, 1^n)`: the coefficient of `b^k` in `F~(1^n|1^n)` at `e = 1`,
/// a polynomial in `a`.
pub fn tilde_f_k(n: usize, k: u32) -> MultiPoly {
    tilde_f_diagonal_e1(n).coeff_of(Var::B, k)
}
