use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use super::{Limits, Perm};
use crate::error::{Error, Result};

/// The subgroup of `S_n` generated by `t_i = s_i s_{i+1} s_i`, with the
/// Cayley-graph distance `tl` of every element from the identity.
#[derive(Debug)]
pub struct TGroup {
    n: usize,
    /// Elements in BFS order, so `tl` is non-decreasing along the list.
    elements: Vec<Perm>,
    distance: HashMap<u64, u32>,
}

impl TGroup {
    /// Breadth-first search from the identity over the generators
    /// `t_1, ..., t_{n-2}`.
    pub fn new(n: usize) -> TGroup {
        let generators: Vec<Perm> = (1..=n.saturating_sub(2)).map(|i| Perm::t(n, i)).collect();
        let id = Perm::identity(n);
        let mut distance = HashMap::from([(id.key(), 0u32)]);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let d = distance[&p.key()];
            for g in &generators {
                let q = p.compose(g);
                if let std::collections::hash_map::Entry::Vacant(slot) = distance.entry(q.key()) {
                    slot.insert(d + 1);
                    elements.push(q);
                    queue.push_back(q);
                }
            }
        }
        TGroup {
            n,
            elements,
            distance,
        }
    }

    /// Process-wide instance for `n`, built once and shared read-only.
    pub fn shared(n: usize) -> Arc<TGroup> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<TGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.read().expect("tl cache poisoned").get(&n) {
            return g.clone();
        }
        let mut w = cache.write().expect("tl cache poisoned");
        w.entry(n).or_insert_with(|| Arc::new(TGroup::new(n))).clone()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.n && self.distance.contains_key(&p.key())
    }

    /// Minimal length of `p` as a word in the `t_i`.
    pub fn tl(&self, p: &Perm) -> Result<u32> {
        if p.degree() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: p.degree(),
            });
        }
        self.distance
            .get(&p.key())
            .copied()
            .ok_or_else(|| Error::NotInSubgroup(p.to_string()))
    }
}

/// Elements of the subgroup generated by the `t_i`, sorted.
pub fn subgroup_tgen(n: usize) -> Vec<Perm> {
    let mut v = TGroup::shared(n).elements().to_vec();
    v.sort();
    v
}

/// `tl(p)` using the shared per-degree distance table.
pub fn tl(p: &Perm) -> Result<u32> {
    TGroup::shared(p.degree()).tl(p)
}

/// Coxeter length (inversion number).
pub fn sl(p: &Perm) -> u32 {
    p.inversions() as u32
}

/// `E_{k,s}^n`: number of elements of `F(1^n|1^n)` with `tl = k`, `sl = s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkTable {
    pub n: usize,
    pub counts: BTreeMap<(u32, u32), u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EkRow {
    pub n: usize,
    pub k: u32,
    pub s: u32,
    pub count: u64,
}

impl EkTable {
    pub fn get(&self, k: u32, s: u32) -> u64 {
        self.counts.get(&(k, s)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_k(&self) -> Option<u32> {
        self.counts.keys().map(|&(k, _)| k).max()
    }

    /// Rows sorted by `(k, s)`.
    pub fn rows(&self) -> Vec<EkRow> {
        self.counts
            .iter()
            .map(|(&(k, s), &count)| EkRow {
                n: self.n,
                k,
                s,
                count,
            })
            .collect()
    }

    /// Entries with `s < k` or `s > 3k`, or `s` of the wrong parity.
    pub fn support_violations(&self) -> Vec<EkRow> {
        self.rows()
            .into_iter()
            .filter(|r| r.s < r.k || r.s > 3 * r.k || (r.s - r.k.min(r.s)) % 2 != 0)
            .collect()
    }
}

/// Tabulates `(tl, sl)` over the whole subgroup, keeping `tl <= k_max` when
/// given.
pub fn ek_table(n: usize, k_max: Option<u32>, limits: &Limits) -> Result<EkTable> {
    if n > limits.subgroup {
        return Err(Error::CapExceeded {
            n,
            cap: limits.subgroup,
        });
    }
    let group = TGroup::shared(n);
    let mut counts = BTreeMap::new();
    for p in group.elements() {
        let k = group.distance[&p.key()];
        if k_max.is_some_and(|m| k > m) {
            continue;
        }
        *counts.entry((k, sl(p))).or_insert(0) += 1;
    }
    Ok(EkTable { n, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{act, fset_scan, Word};

    fn fact(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn group_orders() {
        assert_eq!(subgroup_tgen(3), vec![Perm::identity(3), Perm::t(3, 1)]);
        assert_eq!(subgroup_tgen(4).len(), 4);
        assert_eq!(subgroup_tgen(7).len(), 144);
        for n in 0..=11 {
            let m = n / 2;
            let expected = if n % 2 == 0 {
                fact(m) * fact(m)
            } else {
                fact(m + 1) * fact(m)
            };
            assert_eq!(TGroup::new(n).order(), expected, "n = {n}");
        }
    }

    #[test]
    fn subgroup_is_the_stabilizer_of_constant_words() {
        let limits = Limits::default();
        for n in 1..=7 {
            for letter in [1, 2] {
                let x = Word::repeat(letter, n);
                let mut scan = fset_scan(&x, &x, &limits).unwrap();
                scan.sort();
                assert_eq!(scan, subgroup_tgen(n), "n = {n}");
            }
        }
    }

    #[test]
    fn tl_examples() {
        let g = TGroup::new(6);
        assert_eq!(g.tl(&Perm::identity(6)).unwrap(), 0);
        assert_eq!(g.tl(&Perm::t(6, 2)).unwrap(), 1);
        assert!(matches!(g.tl(&Perm::s(6, 1)), Err(Error::NotInSubgroup(_))));
        for m in 1..=4usize {
            let long: Vec<usize> = (0..m)
                .rev()
                .flat_map(|i| [2 * i + 1, 2 * i + 2])
                .collect();
            let w = Perm::from_one_line(&long).unwrap();
            assert_eq!(tl(&w).unwrap() as usize, m * (m - 1));
            assert_eq!(sl(&w) as usize, 2 * m * (m - 1));
            let odd: Vec<usize> = (1..=2 * m + 1).rev().collect();
            let w = Perm::from_one_line(&odd).unwrap();
            assert_eq!(tl(&w).unwrap() as usize, m * m);
        }
    }

    /// Independent route: the subgroup is `Sym(odd positions) x Sym(even
    /// positions)` and the `t_i` are its adjacent transpositions, so `tl` is
    /// the sum of the inversion numbers within each parity class.
    #[test]
    fn tl_is_sum_of_class_inversions() {
        for n in 2..=9 {
            let g = TGroup::new(n);
            for p in g.elements() {
                let v = p.one_line();
                let mut inv = 0;
                for i in 0..n {
                    for j in (i + 2..n).step_by(2) {
                        if v[i] > v[j] {
                            inv += 1;
                        }
                    }
                }
                assert_eq!(g.tl(p).unwrap(), inv, "{p}");
            }
        }
    }

    #[test]
    fn members_fix_constant_words() {
        for p in subgroup_tgen(6) {
            let x = Word::repeat(1, 6);
            assert_eq!(act(&p, &x).unwrap(), x);
        }
    }

    #[test]
    fn ek_examples() {
        let limits = Limits::default();
        assert_eq!(ek_table(7, Some(4), &limits).unwrap().get(4, 12), 1);
        assert_eq!(ek_table(4, None, &limits).unwrap().get(1, 3), 2);
        assert_eq!(ek_table(9, Some(5), &limits).unwrap().get(5, 15), 4);
        let t2 = ek_table(2, None, &limits).unwrap();
        assert_eq!(t2.rows(), vec![EkRow { n: 2, k: 0, s: 0, count: 1 }]);
    }

    #[test]
    fn ek_totals_and_parity() {
        let limits = Limits::default();
        for n in 0..=10 {
            let t = ek_table(n, None, &limits).unwrap();
            assert_eq!(t.total() as usize, TGroup::new(n).order());
            for ((k, s), _) in &t.counts {
                assert_eq!(k % 2, s % 2, "sl and tl have equal parity");
                assert!(*s <= 3 * k);
            }
        }
        assert!(ek_table(14, None, &limits).is_err());
    }

    #[test]
    fn k_max_truncates() {
        let limits = Limits::default();
        let t = ek_table(8, Some(2), &limits).unwrap();
        assert_eq!(t.max_k(), Some(2));
    }
}
