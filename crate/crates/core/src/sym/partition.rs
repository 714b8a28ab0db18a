use std::collections::BTreeMap;

use serde::Serialize;

use super::{orbit, Limits, Word};
use crate::error::{Error, Result};

/// One orbit of `S_n` on words of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitInfo {
    /// Lexicographically smallest word of the orbit.
    pub representative: Word,
    pub size: usize,
    /// The named form `2^m(12)^k`, `2^m(21)^k`, `1^m(12)^k` or `1^m(21)^k`
    /// from the Pascal decomposition, when one lies in this orbit.
    pub label: Option<String>,
}

fn pattern(letter: u8, m: usize, pair: &str, k: usize) -> (Word, String) {
    let pair_word: Word = pair.parse().expect("pair is a valid word");
    let mut w = Word::repeat(letter, m);
    for _ in 0..k {
        w = w.concat(&pair_word);
    }
    let mut label = String::new();
    if m > 0 {
        label.push_str(&format!("{letter}^{m}"));
    }
    if k > 0 {
        label.push_str(&format!("({pair})^{k}"));
    }
    (w, label)
}

/// The words named by the Pascal decomposition of `N^len`.
///
/// Even length `2n`: `2^{2n}` and, for `k = 1..n`, `2^{2(n-k)}(21)^k` and
/// `1^{2(n-k)}(12)^k`. Odd length `2n+1`: for `k = 0..n`,
/// `2^{2(n-k)+1}(12)^k` and `1^{2(n-k)+1}(21)^k`.
pub fn named_representatives(len: usize) -> Vec<(Word, String)> {
    let n = len / 2;
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    if len % 2 == 0 {
        out.push(pattern(2, 2 * n, "21", 0));
        for k in 1..=n {
            out.push(pattern(2, 2 * (n - k), "21", k));
            out.push(pattern(1, 2 * (n - k), "12", k));
        }
    } else {
        for k in 0..=n {
            out.push(pattern(2, 2 * (n - k) + 1, "12", k));
            out.push(pattern(1, 2 * (n - k) + 1, "21", k));
        }
    }
    out
}

/// Partitions all `2^n` words into orbits, largest first, ties broken by
/// representative.
pub fn orbit_partition(n: usize, limits: &Limits) -> Result<Vec<OrbitInfo>> {
    let cap = 2 * limits.full_scan;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut assigned: BTreeMap<Word, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<Word>> = Vec::new();
    for w in Word::all(n) {
        if assigned.contains_key(&w) {
            continue;
        }
        let o = orbit(&w);
        for x in &o {
            assigned.insert(*x, orbits.len());
        }
        orbits.push(o);
    }
    let mut labels: Vec<Option<String>> = vec![None; orbits.len()];
    for (word, label) in named_representatives(n) {
        let idx = assigned[&word];
        labels[idx].get_or_insert(label);
    }
    let mut out: Vec<OrbitInfo> = orbits
        .into_iter()
        .zip(labels)
        .map(|(o, label)| OrbitInfo {
            representative: o[0],
            size: o.len(),
            label,
        })
        .collect();
    out.sort_by(|x, y| y.size.cmp(&x.size).then(x.representative.cmp(&y.representative)));
    Ok(out)
}
