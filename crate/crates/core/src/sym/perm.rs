use std::fmt;

use crate::error::{Error, Result};

pub const MAX_PERM_DEGREE: usize = 16;

/// A permutation of `{1, ..., n}` in one-line notation, `n <= 16`.
///
/// Composition is right-to-left: `(p * q)(j) = p(q(j))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_PERM_DEGREE],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_PERM_DEGREE, "permutation degree {n} exceeds {MAX_PERM_DEGREE}");
        let mut img = [0u8; MAX_PERM_DEGREE];
        for (j, slot) in img.iter_mut().enumerate().take(n) {
            *slot = j as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_PERM_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {MAX_PERM_DEGREE}"
            )));
        }
        let mut seen = [false; MAX_PERM_DEGREE];
        let mut img = [0u8; MAX_PERM_DEGREE];
        for (j, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
            img[j] = (v - 1) as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    /// Adjacent transposition `s_i = (i, i+1)`, `1 <= i < n`.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} undefined in S_{n}");
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// `t_i = s_i s_{i+1} s_i = (i, i+2)`, `1 <= i <= n - 2`.
    pub fn t(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i + 2 <= n, "t_{i} undefined in S_{n}");
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i + 1);
        p
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_k}` of adjacent transpositions.
    pub fn from_generators(n: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Perm::identity(n), |acc, &i| acc.compose(&Perm::s(n, i)))
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// Image of the 0-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.img[j] as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.img[..self.degree()].iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity(self.degree())
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut img = [0u8; MAX_PERM_DEGREE];
        for (j, slot) in img.iter_mut().enumerate().take(self.degree()) {
            *slot = self.img[other.img[j] as usize];
        }
        Perm { n: self.n, img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_PERM_DEGREE];
        for j in 0..self.degree() {
            img[self.img[j] as usize] = j as u8;
        }
        Perm { n: self.n, img }
    }

    /// Coxeter length in the adjacent transpositions.
    pub fn inversions(&self) -> usize {
        let v = &self.img[..self.degree()];
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// 1-based positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.degree().saturating_sub(1))
            .filter(|&i| self.img[i] > self.img[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// Reduced expression in the `s_i`, read left to right, built by
    /// repeatedly splitting off the leftmost descent on the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_with(|d| d[0])
    }

    /// Reduced expression where `choose` picks which descent to split off
    /// at every step.
    pub fn reduced_word_with(&self, mut choose: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
        let mut p = *self;
        let mut rev = Vec::with_capacity(self.inversions());
        loop {
            let d = p.descents();
            if d.is_empty() {
                break;
            }
            let i = choose(&d);
            debug_assert!(d.contains(&i));
            p.img.swap(i - 1, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Packs the images four bits each.
    pub fn key(&self) -> u64 {
        self.img[..self.degree()]
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &v)| acc | ((v as u64) << (4 * j)))
    }

    /// Every permutation of degree `n`, lexicographically by one-line
    /// notation.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|v| Perm::from_one_line(&v).expect("itertools yields permutations"))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(Perm::s(3, 1).one_line(), vec![2, 1, 3]);
        assert_eq!(Perm::t(4, 2).one_line(), vec![1, 4, 3, 2]);
        assert_eq!(Perm::from_generators(3, &[1, 2, 1]), Perm::t(3, 1));
        assert_eq!(Perm::from_generators(3, &[2, 1, 2]), Perm::t(3, 1));
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Perm::identity(5).inversions(), 0);
        assert_eq!(Perm::t(5, 1).inversions(), 3);
        for n in 1..=5 {
            let long: Vec<usize> = (1..=2 * n + 1).rev().collect();
            assert_eq!(Perm::from_one_line(&long).unwrap().inversions(), n * (2 * n + 1));
        }
    }

    #[test]
    fn reduced_words() {
        assert!(Perm::identity(4).reduced_word().is_empty());
        let t1 = Perm::t(3, 1);
        let w = t1.reduced_word();
        assert_eq!(w.len(), 3);
        assert_eq!(Perm::from_generators(3, &w), t1);
        let p = Perm::from_one_line(&[3, 4, 1, 2]).unwrap();
        let w = p.reduced_word();
        assert_eq!(w.len(), 4);
        assert_eq!(Perm::from_generators(4, &w), p);
    }

    #[test]
    fn reduced_words_for_all_of_s5() {
        for p in Perm::all(5) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.inversions());
            assert_eq!(Perm::from_generators(5, &w), p);
            let w2 = p.reduced_word_with(|d| *d.last().unwrap());
            assert_eq!(Perm::from_generators(5, &w2), p);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let p = Perm::from_one_line(&[2, 3, 1]).unwrap();
        let q = Perm::from_one_line(&[3, 1, 2]).unwrap();
        assert!(p.compose(&q).is_identity());
        assert_eq!(p.inverse(), q);
        assert!(Perm::from_one_line(&[1, 1]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
    }

    #[test]
    fn enumerates_all() {
        assert_eq!(Perm::all(4).count(), 24);
        assert_eq!(Perm::all(0).count(), 1);
    }
}
