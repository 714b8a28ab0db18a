use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_WORD_LEN: usize = 32;

/// A word over the alphabet `{1, 2}`, indexing the monomial `v_x` of the
/// tensor power.
///
/// Packed: bit `i` is set when the letter at position `i + 1` is `2`.
/// Ordered by length, then lexicographically with `1 < 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    len: u8,
    bits: u32,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn new(letters: &[u8]) -> Result<Self> {
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::OutOfRange(format!(
                "words are limited to {MAX_WORD_LEN} letters"
            )));
        }
        let mut bits = 0u32;
        for (i, &l) in letters.iter().enumerate() {
            match l {
                1 => {}
                2 => bits |= 1 << i,
                _ => return Err(Error::InvalidWord(format!("{letters:?}"))),
            }
        }
        Ok(Word {
            len: letters.len() as u8,
            bits,
        })
    }

    /// `letter^n`.
    pub fn repeat(letter: u8, n: usize) -> Self {
        assert!(n <= MAX_WORD_LEN && (letter == 1 || letter == 2));
        let bits = if letter == 2 { mask(n) } else { 0 };
        Word { len: n as u8, bits }
    }

    /// The `index`-th word of length `n` in lexicographic order.
    pub fn from_lex_index(n: usize, index: u32) -> Self {
        debug_assert!(n <= MAX_WORD_LEN);
        let bits = index.reverse_bits().checked_shr(32 - n as u32).unwrap_or(0);
        Word { len: n as u8, bits }
    }

    /// All `2^n` words of length `n`, lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 32, "enumerating all words needs n < 32");
        (0..1u32 << n).map(move |i| Word::from_lex_index(n, i))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at 0-based position `i`.
    pub fn letter(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        1 + ((self.bits >> i) & 1) as u8
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(|i| self.letter(i))
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.letters().collect()
    }

    /// Exchanges the letters 1 and 2.
    pub fn bar(&self) -> Word {
        Word {
            len: self.len,
            bits: !self.bits & mask(self.len()),
        }
    }

    pub fn reversed(&self) -> Word {
        let bits = self.bits.reverse_bits().checked_shr(32 - self.len as u32).unwrap_or(0);
        Word {
            len: self.len,
            bits,
        }
    }

    pub fn push(&self, letter: u8) -> Word {
        assert!(self.len() < MAX_WORD_LEN);
        let bits = if letter == 2 {
            self.bits | (1 << self.len)
        } else {
            self.bits
        };
        Word {
            len: self.len + 1,
            bits,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert!(self.len() + other.len() <= MAX_WORD_LEN);
        Word {
            len: self.len + other.len,
            bits: self.bits | (other.bits << self.len),
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        debug_assert!(n <= self.len());
        Word {
            len: n as u8,
            bits: self.bits & mask(n),
        }
    }

    pub fn last(&self) -> Option<u8> {
        (self.len > 0).then(|| self.letter(self.len() - 1))
    }

    /// Both letters at 0-based positions `i`, `i + 1` flipped.
    pub(crate) fn flip_pair(&self, i: usize) -> Word {
        Word {
            len: self.len,
            bits: self.bits ^ (0b11 << i),
        }
    }

    /// Number of 1-based positions `j` with `letter + j` even. Two words lie
    /// in the same orbit exactly when these counts agree.
    pub fn parity_count(&self) -> usize {
        // letter 1 at odd j, or letter 2 at even j; bit i stands for j = i + 1
        let m = mask(self.len());
        let even_j = 0xAAAA_AAAAu32 & m;
        ((!self.bits & !even_j & m).count_ones() + (self.bits & even_j).count_ones()) as usize
    }

    fn lex_key(&self) -> u32 {
        self.bits.reverse_bits().checked_shr(32 - self.len as u32).unwrap_or(0)
    }
}

fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: Option<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '1' => Some(1),
                '2' => Some(2),
                _ => None,
            })
            .collect();
        match letters {
            Some(l) if l.len() <= MAX_WORD_LEN => Word::new(&l),
            _ => Err(Error::InvalidWord(s.to_string())),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
