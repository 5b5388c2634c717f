//! Affine linear-system solving over GF(2).

use super::bitmatrix::BitMatrix;
use super::bitvec::BitVec;
use crate::error::{Error, Result};

/// Full parametrization of `{x : A·x = b}`: one particular solution plus a
/// basis of the homogeneous kernel. The construction is deterministic — the
/// particular solution sets every free variable to zero, and the nullspace
/// basis is ordered by ascending free column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: BitVec,
    pub nullspace: Vec<BitVec>,
}

/// Outcome of [`solve_affine`]. An inconsistent system is a value, not an
/// error, so callers can branch on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineOutcome {
    Solution(AffineSolution),
    Inconsistent,
}

impl AffineOutcome {
    pub fn solution(&self) -> Option<&AffineSolution> {
        match self {
            AffineOutcome::Solution(s) => Some(s),
            AffineOutcome::Inconsistent => None,
        }
    }
}

/// Solves `constraints · x = rhs` over GF(2) via the RREF of the augmented
/// matrix. `constraints.ncols()` is the number of unknowns.
pub fn solve_affine(constraints: &BitMatrix, rhs: &BitVec) -> Result<AffineOutcome> {
    if rhs.len() != constraints.nrows() {
        return Err(Error::DimensionMismatch {
            left: constraints.nrows(),
            right: rhs.len(),
        });
    }
    let unknowns = constraints.ncols();
    let augmented = if constraints.nrows() == 0 {
        BitMatrix::empty(unknowns + 1)
    } else {
        let rhs_col = BitMatrix::from_rows(
            rhs.iter_bits()
                .map(|b| {
                    let mut v = BitVec::zeros(1);
                    v.set(0, b);
                    v
                })
                .collect(),
        )?;
        BitMatrix::hstack(constraints, &rhs_col)?
    };
    let (reduced, pivots) = augmented.rref();
    if pivots.contains(&unknowns) {
        return Ok(AffineOutcome::Inconsistent);
    }
    let mut particular = BitVec::zeros(unknowns);
    for (i, &p) in pivots.iter().enumerate() {
        if reduced.row(i).get(unknowns) {
            particular.set(p, true);
        }
    }
    let nullspace = constraints.kernel_basis();
    Ok(AffineOutcome::Solution(AffineSolution {
        particular,
        nullspace,
    }))
}

impl AffineSolution {
    /// Number of solutions, `2^nullspace.len()`, or `None` on overflow.
    pub fn count(&self) -> Option<u64> {
        1u64.checked_shl(self.nullspace.len() as u32)
    }

    /// Iterates the whole solution set in counter order: solution `i` is the
    /// particular solution XOR the nullspace vectors selected by the bits of
    /// `i`. Index 0 is the particular solution itself.
    pub fn iter(&self) -> SolutionIter<'_> {
        SolutionIter {
            sol: self,
            cur: self.particular.clone(),
            idx: 0,
            total: self.count().expect("nullspace dimension < 64"),
        }
    }
}

pub struct SolutionIter<'a> {
    sol: &'a AffineSolution,
    cur: BitVec,
    idx: u64,
    total: u64,
}

impl Iterator for SolutionIter<'_> {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.idx == self.total {
            return None;
        }
        if self.idx > 0 {
            // Counter step: XOR every basis vector whose selection bit flips.
            let changed = self.idx ^ (self.idx - 1);
            let mut mask = changed;
            while mask != 0 {
                let j = mask.trailing_zeros() as usize;
                self.cur.xor_assign(&self.sol.nullspace[j]);
                mask &= mask - 1;
            }
        }
        self.idx += 1;
        Some(self.cur.clone())
    }
}
