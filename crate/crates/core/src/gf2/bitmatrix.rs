//! Row-major binary matrices and Gaussian elimination over GF(2).

use super::bitvec::BitVec;
use crate::error::{Error, Result};
use std::fmt;

/// Ordered list of equal-length rows. A matrix with zero rows is valid and
/// acts as the identity element of stacking and block-diagonal sums.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    ncols: usize,
}

impl BitMatrix {
    /// Matrix with no rows over `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            rows: vec![BitVec::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn from_rows(rows: Vec<BitVec>) -> Result<Self> {
        let ncols = match rows.first() {
            Some(r) => r.len(),
            None => {
                return Err(Error::Parameter(
                    "from_rows needs at least one row; use BitMatrix::empty".into(),
                ))
            }
        };
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    left: ncols,
                    right: r.len(),
                });
            }
        }
        Ok(Self { rows, ncols })
    }

    /// Parses rows given as strings of `0`/`1`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| BitVec::from_str01(s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                left: self.ncols,
                right: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot
    /// columns. Elimination picks the leftmost pivot and the topmost row, so
    /// the result is the canonical form used for code equality.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(sel) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, sel);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (
            BitMatrix {
                rows,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M·x = 0}`, one vector per free column
    /// of the RREF, in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.ncols - pivots.len());
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.ncols);
            v.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.rows[i].get(f) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Horizontal concatenation `[A | B]`.
    pub fn hstack(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
        if a.nrows() != b.nrows() {
            return Err(Error::DimensionMismatch {
                left: a.nrows(),
                right: b.nrows(),
            });
        }
        let rows = a
            .rows
            .iter()
            .zip(&b.rows)
            .map(|(x, y)| x.concat(y))
            .collect();
        Ok(BitMatrix {
            rows,
            ncols: a.ncols + b.ncols,
        })
    }

    /// Vertical stacking; both operands must share a column count.
    pub fn vstack(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
        if a.ncols != b.ncols {
            return Err(Error::DimensionMismatch {
                left: a.ncols,
                right: b.ncols,
            });
        }
        let mut rows = a.rows.clone();
        rows.extend(b.rows.iter().cloned());
        Ok(BitMatrix {
            rows,
            ncols: a.ncols,
        })
    }

    /// Block-diagonal sum `[[A, 0], [0, B]]`.
    pub fn block_diag(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        let ncols = a.ncols + b.ncols;
        let mut rows = Vec::with_capacity(a.nrows() + b.nrows());
        for r in &a.rows {
            rows.push(r.concat(&BitVec::zeros(b.ncols)));
        }
        for r in &b.rows {
            rows.push(BitVec::zeros(a.ncols).concat(r));
        }
        BitMatrix { rows, ncols }
    }

    pub fn without_column(&self, c: usize) -> BitMatrix {
        assert!(c < self.ncols);
        BitMatrix {
            rows: self.rows.iter().map(|r| r.without_coord(c)).collect(),
            ncols: self.ncols - 1,
        }
    }

    /// Drops several columns at once; indices must be strictly increasing.
    pub fn without_columns(&self, sorted: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: self.rows.iter().map(|r| r.without_coords(sorted)).collect(),
            ncols: self.ncols - sorted.len(),
        }
    }

    /// Applies a column permutation: column `j` of the result is column
    /// `perm[j]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: self.rows.iter().map(|r| r.select_coords(perm)).collect(),
            ncols: perm.len(),
        }
    }

    pub fn prepend_column(&self, column: &BitVec) -> Result<BitMatrix> {
        if column.len() != self.nrows() {
            return Err(Error::DimensionMismatch {
                left: self.nrows(),
                right: column.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.with_prefix_bit(column.get(i)))
            .collect();
        Ok(BitMatrix {
            rows,
            ncols: self.ncols + 1,
        })
    }

    pub fn append_column(&self, column: &BitVec) -> Result<BitMatrix> {
        if column.len() != self.nrows() {
            return Err(Error::DimensionMismatch {
                left: self.nrows(),
                right: column.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.with_suffix_bit(column.get(i)))
            .collect();
        Ok(BitMatrix {
            rows,
            ncols: self.ncols + 1,
        })
    }

    /// Weight of one column, i.e. how many rows have a 1 there.
    pub fn column_weight(&self, c: usize) -> usize {
        self.rows.iter().filter(|r| r.get(c)).count()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_identity_is_identity() {
        let m = BitMatrix::identity(4);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_drops_duplicate_rows() {
        let m = BitMatrix::from_strs(&["1010", "1010", "0110"]).unwrap();
        let (r, _) = m.rref();
        assert_eq!(r.nrows(), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = BitMatrix::from_strs(&["1101", "0111", "1010"]).unwrap();
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(4).rank(), 4);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = BitMatrix::from_strs(&["1101", "0110"]).unwrap();
        let kb = m.kernel_basis();
        assert_eq!(kb.len(), 2);
        for v in &kb {
            for row in m.rows() {
                assert!(!row.parity_and(v));
            }
        }
    }

    #[test]
    fn block_diag_empty_is_identity_element() {
        let b = BitMatrix::from_strs(&["101", "011"]).unwrap();
        let g = BitMatrix::block_diag(&BitMatrix::empty(0), &b);
        assert_eq!(g, b);
    }

    #[test]
    fn column_edits() {
        let m = BitMatrix::from_strs(&["101", "011"]).unwrap();
        assert_eq!(m.without_column(0), BitMatrix::from_strs(&["01", "11"]).unwrap());
        assert_eq!(m.column_weight(2), 2);
        let col = BitVec::from_str01("10").unwrap();
        assert_eq!(
            m.prepend_column(&col).unwrap(),
            BitMatrix::from_strs(&["1101", "0011"]).unwrap()
        );
    }
}
