//! Triorthogonal matrices and triorthogonal spaces.
//!
//! A binary matrix is triorthogonal when every pair of rows has even overlap
//! `|g_a ∧ g_b|` and every triple of distinct rows has even triple overlap
//! `|g_a ∧ g_b ∧ g_c|`. A linear code is a triorthogonal space when the
//! triple-overlap condition holds for every three codewords, repeats allowed;
//! it suffices to check basis triples with indices `i ≤ j ≤ k`.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, LinearCode};
use std::fmt;

/// First index tuple violating a triorthogonality condition. Indices are
/// 0-based row numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Pair(a, b) => write!(f, "rows ({a},{b}) have odd pairwise overlap"),
            Violation::Triple(a, b, c) => {
                write!(f, "rows ({a},{b},{c}) have odd triple overlap")
            }
        }
    }
}

/// Outcome of an exhaustive pair/triple scan. A report rather than an error,
/// so callers can show which tuple fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriReport {
    pub pairwise_ok: bool,
    pub triple_ok: bool,
    pub first_violation: Option<Violation>,
}

impl TriReport {
    pub fn is_ok(&self) -> bool {
        self.pairwise_ok && self.triple_ok
    }
}

/// Scans all row pairs and row triples of `m` for odd overlaps. The reported
/// violation is the lexicographically first failing pair if any, otherwise
/// the first failing triple.
pub fn check_trimatrix(m: &BitMatrix) -> TriReport {
    let rows = m.rows();
    let n = rows.len();
    let mut first_pair = None;
    for a in 0..n {
        for b in a + 1..n {
            if rows[a].parity_and(&rows[b]) {
                first_pair = Some(Violation::Pair(a, b));
                break;
            }
        }
        if first_pair.is_some() {
            break;
        }
    }
    let mut first_triple = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if BitVec::parity_and3(&rows[a], &rows[b], &rows[c]) {
                    first_triple = Some(Violation::Triple(a, b, c));
                    break 'outer;
                }
            }
        }
    }
    TriReport {
        pairwise_ok: first_pair.is_none(),
        triple_ok: first_triple.is_none(),
        first_violation: first_pair.or(first_triple),
    }
}

/// A validated full-rank triorthogonal matrix together with its odd/even row
/// partition. Rows keep their original order in `matrix`; `odd_rows` and
/// `even_rows` list the partition with the original relative order preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix {
    matrix: BitMatrix,
    odd: Vec<usize>,
    even: Vec<usize>,
}

impl TriMatrix {
    /// Validates triorthogonality and full rank, then partitions the rows by
    /// weight parity.
    pub fn partition_rows(matrix: BitMatrix) -> Result<TriMatrix> {
        let report = check_trimatrix(&matrix);
        if let Some(v) = report.first_violation {
            return Err(Error::NotTriorthogonal(v));
        }
        let rank = matrix.rank();
        if rank != matrix.nrows() {
            return Err(Error::RankDeficient {
                rank,
                rows: matrix.nrows(),
            });
        }
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for (i, row) in matrix.rows().iter().enumerate() {
            if row.weight() % 2 == 1 {
                odd.push(i);
            } else {
                even.push(i);
            }
        }
        Ok(TriMatrix { matrix, odd, even })
    }

    /// Number of odd-weight rows (logical qubits of the associated code).
    pub fn k(&self) -> usize {
        self.odd.len()
    }

    /// Number of columns (physical qubits).
    pub fn n(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.nrows()
    }

    /// The rows in their original order.
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.matrix
    }

    pub fn odd_indices(&self) -> &[usize] {
        &self.odd
    }

    pub fn even_indices(&self) -> &[usize] {
        &self.even
    }

    /// The odd-weight rows as a matrix (may be empty).
    pub fn odd_rows(&self) -> BitMatrix {
        self.rows_at(&self.odd)
    }

    /// The even-weight rows as a matrix (may be empty).
    pub fn even_rows(&self) -> BitMatrix {
        self.rows_at(&self.even)
    }

    fn rows_at(&self, idx: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::empty(self.n());
        for &i in idx {
            m.push_row(self.matrix.row(i).clone()).expect("same width");
        }
        m
    }

    /// The matrix re-stacked with odd rows on top of even rows.
    pub fn stacked(&self) -> BitMatrix {
        BitMatrix::vstack(&self.odd_rows(), &self.even_rows()).expect("same width")
    }

    /// Span of all rows.
    pub fn row_space(&self) -> LinearCode {
        LinearCode::from_span(&self.matrix)
    }

    /// Span of the even-weight rows.
    pub fn even_space(&self) -> LinearCode {
        LinearCode::from_span(&self.even_rows())
    }
}

/// Basis check for the triorthogonal-space property: all triples `i ≤ j ≤ k`
/// of basis rows must have even overlap. The repeated-index cases cover even
/// row weights (`i = j = k`) and pairwise orthogonality (`i = j < k`).
pub fn check_trispace(c: &LinearCode) -> bool {
    let rows = c.basis().rows();
    let s = rows.len();
    for i in 0..s {
        for j in i..s {
            for k in j..s {
                if BitVec::parity_and3(&rows[i], &rows[j], &rows[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// A linear code validated to be a triorthogonal space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSpace {
    code: LinearCode,
    unital: bool,
}

impl TriSpace {
    pub fn new(code: LinearCode) -> Result<TriSpace> {
        if !check_trispace(&code) {
            return Err(Error::NotTriorthogonalSpace);
        }
        let unital = code.is_unital();
        Ok(TriSpace { code, unital })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Whether the space contains the all-one vector.
    pub fn is_unital(&self) -> bool {
        self.unital
    }
}

/// Result of normalizing a triorthogonal space into a triorthogonal matrix
/// with odd-weight rows. `removed_columns` lists the pivot columns deleted
/// from the basis, and `column_map[j]` is the original position of output
/// column `j`, so the construction is reproducible.
#[derive(Debug, Clone)]
pub struct SpaceNormalization {
    pub tri: TriMatrix,
    pub removed_columns: Vec<usize>,
    pub column_map: Vec<usize>,
}

/// Turns a triorthogonal space into a triorthogonal matrix with odd rows by
/// deleting the first `k` pivot columns of its RREF basis. On the systematic
/// form `[I_r | P]` this is exactly the passage to `[O|P₁ ; I_{r-k}|P₀]`,
/// reassembled on the original column positions.
///
/// The output is validated rather than trusted: the odd-row count equals the
/// number of odd-weight rows actually produced (always `k` for a genuine
/// triorthogonal space).
pub fn space_to_trimatrix(c: &LinearCode, k: usize) -> Result<SpaceNormalization> {
    if !check_trispace(c) {
        return Err(Error::NotTriorthogonalSpace);
    }
    if k == 0 || k > c.dim() {
        return Err(Error::Parameter(format!(
            "k must satisfy 1 <= k <= dim = {}, got {k}",
            c.dim()
        )));
    }
    let removed: Vec<usize> = c.pivots()[..k].to_vec();
    let reduced = c.basis().without_columns(&removed);
    let column_map: Vec<usize> = (0..c.length()).filter(|c| !removed.contains(c)).collect();
    let tri = TriMatrix::partition_rows(reduced)?;
    Ok(SpaceNormalization {
        tri,
        removed_columns: removed,
        column_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn matching(k: usize) -> BitMatrix {
        BitMatrix::hstack(&BitMatrix::identity(k), &BitMatrix::identity(k)).unwrap()
    }

    fn selfdual_8() -> BitMatrix {
        BitMatrix::from_strs(&["10000111", "01001011", "00101101", "00011110"]).unwrap()
    }

    fn tri_5x14() -> BitMatrix {
        BitMatrix::from_strs(&[
            "11111110000000",
            "00000001111111",
            "10101011010101",
            "01100110110011",
            "00011110001111",
        ])
        .unwrap()
    }

    #[test]
    fn matching_matrix_passes() {
        assert!(check_trimatrix(&matching(4)).is_ok());
    }

    #[test]
    fn selfdual_8_fails_on_first_triple() {
        let report = check_trimatrix(&selfdual_8());
        assert!(report.pairwise_ok);
        assert!(!report.triple_ok);
        assert_eq!(report.first_violation, Some(Violation::Triple(0, 1, 2)));
    }

    #[test]
    fn tri_5x14_passes_and_partitions() {
        let report = check_trimatrix(&tri_5x14());
        assert!(report.is_ok());
        let t = TriMatrix::partition_rows(tri_5x14()).unwrap();
        assert_eq!(t.k(), 2);
        assert_eq!(t.odd_indices(), &[0, 1]);
        assert_eq!(t.n(), 14);
    }

    #[test]
    fn matching_partitions_with_no_odd_rows() {
        let t = TriMatrix::partition_rows(matching(3)).unwrap();
        assert_eq!(t.k(), 0);
        assert_eq!(t.even_indices().len(), 3);
    }

    #[test]
    fn rank_deficient_matrix_is_rejected() {
        let m = BitMatrix::from_strs(&["1010", "1010"]).unwrap();
        assert!(matches!(
            TriMatrix::partition_rows(m),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn non_triorthogonal_matrix_is_rejected() {
        assert!(matches!(
            TriMatrix::partition_rows(selfdual_8()),
            Err(Error::NotTriorthogonal(Violation::Triple(0, 1, 2)))
        ));
    }

    #[test]
    fn trispace_examples() {
        assert!(check_trispace(&LinearCode::from_span(&matching(4))));
        assert!(!check_trispace(&LinearCode::from_span(&selfdual_8())));
        assert!(check_trispace(&LinearCode::zero(5)));
    }

    #[test]
    fn trispace_check_is_basis_independent() {
        // Row operations change the basis but not the span.
        let m = matching(3);
        let mut rows = m.rows().to_vec();
        let r0 = rows[0].clone();
        rows[1].xor_assign(&r0);
        rows.swap(0, 2);
        let shuffled = BitMatrix::from_rows(rows).unwrap();
        assert_eq!(
            check_trispace(&LinearCode::from_span(&shuffled)),
            check_trispace(&LinearCode::from_span(&m))
        );
    }

    #[test]
    fn row_subsets_of_a_trimatrix_stay_triorthogonal() {
        let t = TriMatrix::partition_rows(tri_5x14()).unwrap();
        let rows = t.matrix().rows();
        for mask in 1u32..(1 << rows.len()) {
            let subset: Vec<_> = (0..rows.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| rows[i].clone())
                .collect();
            assert!(check_trimatrix(&BitMatrix::from_rows(subset).unwrap()).is_ok());
        }
    }

    #[test]
    fn normalize_matching_with_k1() {
        let c = LinearCode::from_span(&matching(2));
        let norm = space_to_trimatrix(&c, 1).unwrap();
        assert_eq!(norm.removed_columns, vec![0]);
        assert_eq!(
            norm.tri.matrix(),
            &BitMatrix::from_strs(&["010", "101"]).unwrap()
        );
        assert_eq!(norm.tri.k(), 1);
    }

    #[test]
    fn normalize_with_k_equal_to_dim() {
        let c = LinearCode::from_span(&matching(2));
        let norm = space_to_trimatrix(&c, 2).unwrap();
        // Both pivot columns removed: only the P block remains.
        assert_eq!(norm.tri.n(), 2);
        assert_eq!(norm.tri.k(), 2);
        assert!(check_trimatrix(norm.tri.matrix()).is_ok());
    }

    #[test]
    fn normalize_rejects_bad_k() {
        let c = LinearCode::from_span(&matching(2));
        assert!(space_to_trimatrix(&c, 0).is_err());
        assert!(space_to_trimatrix(&c, 3).is_err());
    }

    #[test]
    fn normalize_rejects_non_trispace() {
        let c = LinearCode::from_span(&selfdual_8());
        assert!(matches!(
            space_to_trimatrix(&c, 1),
            Err(Error::NotTriorthogonalSpace)
        ));
    }

    #[test]
    fn partition_preserves_row_multiset() {
        let t = TriMatrix::partition_rows(tri_5x14()).unwrap();
        let mut original: Vec<_> = t.matrix().rows().to_vec();
        let mut stacked: Vec<_> = t.stacked().into_rows();
        original.sort();
        stacked.sort();
        assert_eq!(original, stacked);
    }
}
