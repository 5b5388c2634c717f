//! Packed binary vectors.
//!
//! Coordinates are packed 64 per machine word, little-endian within a word:
//! coordinate `i` is bit `i % 64` of word `i / 64`, and coordinate 0 is bit 0
//! of word 0. Bits beyond `len` are kept zero so that equality, hashing and
//! weight can work directly on the words.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; word_count(len)],
            len,
        }
    }

    /// All-one vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            words: vec![!0u64; word_count(len)],
            len,
        };
        v.mask_tail();
        v
    }

    /// Standard basis vector with a single 1 at `bit`.
    pub fn unit(len: usize, bit: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(bit, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters, one per coordinate.
    pub fn from_str01(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("invalid character {other:?} in bit string"),
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        if value {
            self.words[i / 64] |= 1u64 << (i % 64);
        } else {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    /// Coordinatewise sum over GF(2) (XOR).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Coordinatewise product (AND), the wedge of two vectors.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self {
            words,
            len: self.len,
        })
    }

    /// In-place XOR; both vectors must have the same length.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of `|self ∧ other|`, i.e. the Euclidean inner product over GF(2).
    pub fn parity_and(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Parity of the triple overlap `|a ∧ b ∧ c|`.
    pub fn parity_and3(a: &Self, b: &Self, c: &Self) -> bool {
        debug_assert!(a.len == b.len && b.len == c.len);
        let mut acc = 0u32;
        for ((x, y), z) in a.words.iter().zip(&b.words).zip(&c.words) {
            acc ^= (x & y & z).count_ones();
        }
        acc & 1 == 1
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for (i, b) in self.iter_bits().enumerate() {
            if b {
                out.set(i, true);
            }
        }
        for (i, b) in other.iter_bits().enumerate() {
            if b {
                out.set(self.len + i, true);
            }
        }
        out
    }

    /// Copy with one extra coordinate inserted at the front.
    pub fn with_prefix_bit(&self, bit: bool) -> Self {
        let mut out = Self::zeros(self.len + 1);
        out.set(0, bit);
        for (i, b) in self.iter_bits().enumerate() {
            if b {
                out.set(i + 1, true);
            }
        }
        out
    }

    /// Copy with one extra coordinate appended at the back.
    pub fn with_suffix_bit(&self, bit: bool) -> Self {
        let mut out = Self::zeros(self.len + 1);
        for (i, b) in self.iter_bits().enumerate() {
            if b {
                out.set(i, true);
            }
        }
        out.set(self.len, bit);
        out
    }

    /// Copy with coordinate `i` removed.
    pub fn without_coord(&self, i: usize) -> Self {
        assert!(i < self.len);
        let mut out = Self::zeros(self.len - 1);
        let mut j = 0;
        for (pos, b) in self.iter_bits().enumerate() {
            if pos == i {
                continue;
            }
            if b {
                out.set(j, true);
            }
            j += 1;
        }
        out
    }

    /// Copy with every coordinate in `sorted` removed. Indices must be
    /// strictly increasing.
    pub fn without_coords(&self, sorted: &[usize]) -> Self {
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        let mut out = Self::zeros(self.len - sorted.len());
        let mut skip = sorted.iter().peekable();
        let mut j = 0;
        for (pos, b) in self.iter_bits().enumerate() {
            if skip.peek() == Some(&&pos) {
                skip.next();
                continue;
            }
            if b {
                out.set(j, true);
            }
            j += 1;
        }
        out
    }

    /// Copy keeping only the given coordinates, in the given order.
    pub fn select_coords(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(cols.len());
        for (j, &c) in cols.iter().enumerate() {
            if self.get(c) {
                out.set(j, true);
            }
        }
        out
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}
