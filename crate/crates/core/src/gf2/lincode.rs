//! Binary linear codes presented by a canonical RREF basis.

use super::bitmatrix::BitMatrix;
use super::bitvec::BitVec;
use crate::error::{Error, Result};
use std::fmt;

/// A linear code stored as its reduced row-echelon basis, so two equal codes
/// compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    basis: BitMatrix,
    pivots: Vec<usize>,
    length: usize,
}

impl LinearCode {
    /// Code spanned by the rows of `m`. Zero rows and dependencies are
    /// removed by the canonicalization.
    pub fn from_span(m: &BitMatrix) -> Self {
        let (basis, pivots) = m.rref();
        Self {
            basis,
            pivots,
            length: m.ncols(),
        }
    }

    /// The zero code of the given length.
    pub fn zero(length: usize) -> Self {
        Self {
            basis: BitMatrix::empty(length),
            pivots: Vec::new(),
            length,
        }
    }

    /// The full space of the given length.
    pub fn full(length: usize) -> Self {
        Self::from_span(&BitMatrix::identity(length))
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.length {
            return Err(Error::DimensionMismatch {
                left: self.length,
                right: v.len(),
            });
        }
        let mut v = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(self.basis.row(i));
            }
        }
        Ok(v.is_zero())
    }

    /// Whether `other` is a subcode of `self`.
    pub fn contains_code(&self, other: &LinearCode) -> Result<bool> {
        for row in other.basis.rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual code: all vectors orthogonal to every codeword.
    pub fn dual(&self) -> LinearCode {
        if self.dim() == 0 {
            return LinearCode::full(self.length);
        }
        let kb = self.basis.kernel_basis();
        if kb.is_empty() {
            return LinearCode::zero(self.length);
        }
        LinearCode::from_span(&BitMatrix::from_rows(kb).expect("kernel rows share length"))
    }

    /// Iterator over all `2^dim` codewords, or a budget error if that count
    /// exceeds `limit`. The order is the Gray-code walk documented on
    /// [`CodewordIter`].
    pub fn codewords(&self, limit: u64) -> Result<CodewordIter<'_>> {
        let total = enumeration_count(self.dim(), limit, None)?;
        Ok(CodewordIter {
            basis: self.basis.rows(),
            cur: BitVec::zeros(self.length),
            idx: 0,
            total,
        })
    }

    /// Exact minimum distance by exhaustive enumeration.
    pub fn min_weight(&self, limit: u64) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::UndefinedDistance);
        }
        enumeration_count(self.dim(), limit, None)?;
        let mut cur = BitVec::zeros(self.length);
        let mut best = usize::MAX;
        for i in 1u64..1u64 << self.dim() {
            cur.xor_assign(self.basis.row(i.trailing_zeros() as usize));
            best = best.min(cur.weight());
        }
        Ok(best)
    }

    /// Whether the all-one vector is a codeword.
    pub fn is_unital(&self) -> bool {
        self.contains(&BitVec::ones(self.length)).expect("length matches")
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.length, self.dim())
    }
}

/// Checks `2^dim <= limit` and returns the codeword count.
pub(crate) fn enumeration_count(
    dim: usize,
    limit: u64,
    upper_bound: Option<usize>,
) -> Result<u64> {
    if dim >= 63 || (1u64 << dim) > limit {
        return Err(Error::BudgetExceeded {
            needed_log2: dim as u32,
            limit,
            upper_bound,
        });
    }
    Ok(1u64 << dim)
}

/// Yields every codeword exactly once, starting from zero, stepping through
/// the binary-reflected Gray sequence: step `i` (1-based) XORs basis row
/// `trailing_zeros(i)`, so the subset visited at step `i` is `i ^ (i >> 1)`.
pub struct CodewordIter<'a> {
    basis: &'a [BitVec],
    cur: BitVec,
    idx: u64,
    total: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.idx == self.total {
            return None;
        }
        if self.idx > 0 {
            let flip = self.idx.trailing_zeros() as usize;
            self.cur.xor_assign(&self.basis[flip]);
        }
        self.idx += 1;
        Some(self.cur.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.total - self.idx) as usize;
        (rem, Some(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const LIMIT: u64 = 1 << 26;

    #[test]
    fn dual_of_full_space_is_zero_code() {
        let c = LinearCode::full(5);
        let d = c.dual();
        assert_eq!(d.dim(), 0);
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn matching_code_is_self_dual() {
        let m = BitMatrix::hstack(&BitMatrix::identity(3), &BitMatrix::identity(3)).unwrap();
        let c = LinearCode::from_span(&m);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn dual_dimension_is_complementary() {
        let m = BitMatrix::from_strs(&[
            "000011111100001",
            "100011100001111",
            "010010011010111",
            "001001010111011",
            "000100101111101",
        ])
        .unwrap();
        let c = LinearCode::from_span(&m);
        assert_eq!(c.dim(), 5);
        assert_eq!(c.dual().dim(), 10);
    }

    #[test]
    fn min_weight_examples() {
        let c = LinearCode::from_span(&BitMatrix::from_strs(&["110", "011"]).unwrap());
        assert_eq!(c.min_weight(LIMIT).unwrap(), 2);

        let rep = LinearCode::from_span(&BitMatrix::from_strs(&["1111111"]).unwrap());
        assert_eq!(rep.min_weight(LIMIT).unwrap(), 7);

        assert!(matches!(
            LinearCode::zero(4).min_weight(LIMIT),
            Err(Error::UndefinedDistance)
        ));
    }

    #[test]
    fn min_weight_budget_guard() {
        let c = LinearCode::full(10);
        assert!(matches!(
            c.min_weight(512),
            Err(Error::BudgetExceeded { needed_log2: 10, .. })
        ));
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let c = LinearCode::from_span(&BitMatrix::from_strs(&["1100", "0110"]).unwrap());
        let words: Vec<_> = c.codewords(LIMIT).unwrap().collect();
        assert_eq!(words.len(), 4);
        let set: HashSet<_> = words.into_iter().collect();
        assert_eq!(set.len(), 4);
        assert!(set.contains(&BitVec::zeros(4)));
    }

    #[test]
    fn zero_code_enumerates_only_zero() {
        let words: Vec<_> = LinearCode::zero(6).codewords(LIMIT).unwrap().collect();
        assert_eq!(words, vec![BitVec::zeros(6)]);
    }

    #[test]
    fn membership_matches_brute_force_span() {
        let m = BitMatrix::from_strs(&["10110", "01011", "00101"]).unwrap();
        let c = LinearCode::from_span(&m);
        let mut span = HashSet::new();
        for w in c.codewords(LIMIT).unwrap() {
            span.insert(w);
        }
        for bits in 0u32..32 {
            let v = BitVec::from_bools(&(0..5).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
            assert_eq!(c.contains(&v).unwrap(), span.contains(&v));
        }
    }
}
