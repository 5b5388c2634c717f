//! Matrix-to-matrix constructions that preserve triorthogonality: shortening,
//! extension, column concatenation, block-diagonal sums, Plotkin-style
//! variants, row-pair sums, building-up, and padding with a self-dual block.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, LinearCode};
use crate::params::{CodeParams, DzValue};
use crate::triortho::{TriMatrix, TriSpace};

/// Outcome of shortening a triorthogonal matrix at one column: the rows that
/// had a 0 there, with that column removed.
///
/// When the result is full rank and both `odd_count` and `even_count` are
/// positive, its code has parameters `[[n-1, odd_count]]`. Rows are returned
/// even if linearly dependent; rank is the caller's concern.
#[derive(Debug, Clone)]
pub struct ShortenResult {
    pub matrix: BitMatrix,
    /// Indices (into the original matrix) of the rows that survived.
    pub kept_rows: Vec<usize>,
    /// Surviving rows of odd weight.
    pub odd_count: usize,
    /// Surviving rows of even weight.
    pub even_count: usize,
}

impl ShortenResult {
    /// Both row classes survived, so the `[[n-1, odd_count]]` parameter claim
    /// applies (given full rank).
    pub fn parameter_rule_applies(&self) -> bool {
        self.odd_count > 0 && self.even_count > 0
    }
}

/// Keeps exactly the rows with a 0 at column `i` and deletes that column.
/// The result is always triorthogonal when the input is.
pub fn shorten(g: &TriMatrix, i: usize) -> Result<ShortenResult> {
    if i >= g.n() {
        return Err(Error::Parameter(format!(
            "column {i} out of range for {} columns",
            g.n()
        )));
    }
    let mut matrix = BitMatrix::empty(g.n() - 1);
    let mut kept_rows = Vec::new();
    let mut odd_count = 0;
    let mut even_count = 0;
    for (idx, row) in g.matrix().rows().iter().enumerate() {
        if row.get(i) {
            continue;
        }
        kept_rows.push(idx);
        if row.weight() % 2 == 1 {
            odd_count += 1;
        } else {
            even_count += 1;
        }
        matrix.push_row(row.without_coord(i)).expect("same width");
    }
    Ok(ShortenResult {
        matrix,
        kept_rows,
        odd_count,
        even_count,
    })
}

/// Deletes column `i`, keeping every row. Triorthogonality is preserved
/// whenever the deleted column carries at most one 1, since such a column
/// contributes nothing to any pair or triple of distinct rows.
pub fn delete_column(m: &BitMatrix, i: usize) -> Result<BitMatrix> {
    if i >= m.ncols() {
        return Err(Error::Parameter(format!(
            "column {i} out of range for {} columns",
            m.ncols()
        )));
    }
    Ok(m.without_column(i))
}

/// Prepends one column that is the indicator of row `i` (the new column has
/// its single 1 in that row), flipping the weight parity of row `i` only.
/// When row `i` has odd weight the new matrix has one fewer odd row.
pub fn extend(g: &TriMatrix, i: usize) -> Result<TriMatrix> {
    extend_at(g, i, false)
}

/// [`extend`] with a choice of column position; the canonical position
/// prepends, `append = true` adds the column at the end instead.
pub fn extend_at(g: &TriMatrix, i: usize, append: bool) -> Result<TriMatrix> {
    if i >= g.num_rows() {
        return Err(Error::Parameter(format!(
            "row {i} out of range for {} rows",
            g.num_rows()
        )));
    }
    let column = BitVec::unit(g.num_rows(), i);
    let extended = if append {
        g.matrix().append_column(&column)?
    } else {
        g.matrix().prepend_column(&column)?
    };
    TriMatrix::partition_rows(extended)
}

/// Horizontal concatenation `[A | B]` of two triorthogonal matrices with the
/// same row count; the overlap parities add, so the result stays
/// triorthogonal.
pub fn concat_columns(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    BitMatrix::hstack(a, b)
}

/// Block-diagonal sum `[[A, 0], [0, B]]` of two triorthogonal matrices. The
/// empty matrix is the identity element.
pub fn block_diag(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    BitMatrix::block_diag(a, b)
}

/// Parameter rule for the block-diagonal sum of two triorthogonal codes:
/// lengths and logical counts add, the distance is the minimum. Requires
/// both sides to have logical qubits.
pub fn direct_sum_params(pa: &CodeParams, pb: &CodeParams) -> Result<CodeParams> {
    if pa.k == 0 || pb.k == 0 {
        return Err(Error::Parameter(
            "direct-sum parameter rule needs k > 0 on both sides".into(),
        ));
    }
    Ok(CodeParams {
        n: pa.n + pb.n,
        k: pa.k + pb.k,
        dz: DzValue::min(&pa.dz, &pb.dz),
    })
}

/// The two Plotkin-style doublings of a triorthogonal matrix, both built on
/// the odd/even partition `[G₁; G₀]` and both triorthogonal.
#[derive(Debug, Clone)]
pub struct PlotkinVariants {
    /// `[G₁ G₁ ; O G₀]` — every row has even weight, so the row span is a
    /// triorthogonal space.
    pub prime: BitMatrix,
    /// `[O G₁ ; G₀ G₀]` — keeps the odd rows odd and yields a `[[2n, k]]`
    /// code whose distance is at least the minimum distance of the dual of
    /// the doubled even block.
    pub double_prime: BitMatrix,
}

pub fn plotkin_variants(g: &TriMatrix) -> PlotkinVariants {
    let odd = g.odd_rows();
    let even = g.even_rows();
    let n = g.n();
    let zeros_odd = BitMatrix::zeros(odd.nrows(), n);
    let zeros_even = BitMatrix::zeros(even.nrows(), n);

    let top_prime = BitMatrix::hstack(&odd, &odd).expect("same rows");
    let bot_prime = BitMatrix::hstack(&zeros_even, &even).expect("same rows");
    let prime = BitMatrix::vstack(&top_prime, &bot_prime).expect("same cols");

    let top_dp = BitMatrix::hstack(&zeros_odd, &odd).expect("same rows");
    let bot_dp = BitMatrix::hstack(&even, &even).expect("same rows");
    let double_prime = BitMatrix::vstack(&top_dp, &bot_dp).expect("same cols");

    PlotkinVariants {
        prime,
        double_prime,
    }
}

/// Lower bound on the distance of the `double_prime` variant: the minimum
/// distance of the dual of the doubled even-row span.
pub fn plotkin_double_bound(g: &TriMatrix, limit: u64) -> Result<usize> {
    let even = g.even_rows();
    let doubled = BitMatrix::hstack(&even, &even)?;
    LinearCode::from_span(&doubled).dual().min_weight(limit)
}

/// Rows `idx_a[t] + idx_b[t]` for two disjoint index lists of equal length.
/// Sums of disjoint row pairs of a triorthogonal matrix are triorthogonal.
pub fn row_pair_sum(g0: &BitMatrix, idx_a: &[usize], idx_b: &[usize]) -> Result<BitMatrix> {
    if idx_a.len() != idx_b.len() {
        return Err(Error::Parameter(format!(
            "index lists differ in length: {} vs {}",
            idx_a.len(),
            idx_b.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &i in idx_a.iter().chain(idx_b) {
        if i >= g0.nrows() {
            return Err(Error::Parameter(format!(
                "row {i} out of range for {} rows",
                g0.nrows()
            )));
        }
        if !seen.insert(i) {
            return Err(Error::Parameter(format!("row {i} used twice")));
        }
    }
    let mut out = BitMatrix::empty(g0.ncols());
    for (&a, &b) in idx_a.iter().zip(idx_b) {
        out.push_row(g0.row(a).add(g0.row(b))?).expect("same width");
    }
    Ok(out)
}

/// Building-up: from an `n×m` triorthogonal matrix and a length-`m` vector
/// `x`, produce the `(n+1)×3m` triorthogonal matrix whose first row is
/// `(1…1 | 0…0 | x)` and whose remaining rows are `(y_i | y_i | g_i)` with
/// `y_i = x ∧ g_i`.
pub fn building_up(g0: &BitMatrix, x: &BitVec) -> Result<BitMatrix> {
    let m = g0.ncols();
    if x.len() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: x.len(),
        });
    }
    let mut out = BitMatrix::empty(3 * m);
    out.push_row(BitVec::ones(m).concat(&BitVec::zeros(m)).concat(x))
        .expect("width 3m");
    for g in g0.rows() {
        let y = x.wedge(g)?;
        out.push_row(y.concat(&y).concat(g)).expect("width 3m");
    }
    Ok(out)
}

/// The matching-pair generator `[I_t | I_t]`, a self-dual triorthogonal
/// block used for padding.
pub fn matching_matrix(t: usize) -> BitMatrix {
    BitMatrix::hstack(&BitMatrix::identity(t), &BitMatrix::identity(t)).expect("same rows")
}

/// Pads a triorthogonal matrix with the block `[I_t | I_t]`, giving
/// `[[n + 2t, k, d_Z]]` with the distance unchanged.
pub fn pad_with_selfdual(a: &TriMatrix, t: usize) -> Result<TriMatrix> {
    if a.k() == 0 {
        return Err(Error::Parameter(
            "padding rule needs at least one odd-weight row".into(),
        ));
    }
    if t < 1 {
        return Err(Error::Parameter("pad size t must be at least 1".into()));
    }
    let padded = block_diag(a.matrix(), &matching_matrix(t));
    TriMatrix::partition_rows(padded)
}

/// Shortens a triorthogonal space at coordinate `i`: the codewords with a 0
/// there, with that column deleted. When some codeword has a 1 at `i` the
/// dimension drops by exactly 1 and the minimum distance cannot decrease;
/// otherwise the dimension is unchanged. The result is reported as-is.
pub fn shorten_space(c: &TriSpace, i: usize) -> Result<TriSpace> {
    let code = c.code();
    if i >= code.length() {
        return Err(Error::Parameter(format!(
            "coordinate {i} out of range for length {}",
            code.length()
        )));
    }
    let mut rows: Vec<BitVec> = code.basis().rows().to_vec();
    // Clear coordinate i from all rows using one row that has a 1 there,
    // then drop that row: the remainder spans the subcode vanishing at i.
    if let Some(lead) = rows.iter().position(|r| r.get(i)) {
        let lead_row = rows.remove(lead);
        for r in &mut rows {
            if r.get(i) {
                r.xor_assign(&lead_row);
            }
        }
    }
    let shortened: Vec<BitVec> = rows.iter().map(|r| r.without_coord(i)).collect();
    let code = if shortened.is_empty() {
        LinearCode::zero(code.length() - 1)
    } else {
        LinearCode::from_span(&BitMatrix::from_rows(shortened)?)
    };
    TriSpace::new(code)
}

/// Classical Plotkin sum `{(u | u+v)}` of two same-length codes, with
/// generator `[G₁ G₁ ; O G₂]`. Its minimum distance is
/// `min(2·d(C₁), d(C₂))`. This is a classical-code utility only: the stack
/// need not be triorthogonal even when both inputs are.
pub fn plotkin_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.length() != c2.length() {
        return Err(Error::DimensionMismatch {
            left: c1.length(),
            right: c2.length(),
        });
    }
    let n = c1.length();
    let top = BitMatrix::hstack(c1.basis(), c1.basis())?;
    let bottom = BitMatrix::hstack(&BitMatrix::zeros(c2.dim(), n), c2.basis())?;
    Ok(LinearCode::from_span(&BitMatrix::vstack(&top, &bottom)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triortho::{check_trimatrix, check_trispace};

    const LIMIT: u64 = 1 << 26;

    fn tri(rows: &[&str]) -> TriMatrix {
        TriMatrix::partition_rows(BitMatrix::from_strs(rows).unwrap()).unwrap()
    }

    fn tri_5x14() -> TriMatrix {
        tri(&[
            "11111110000000",
            "00000001111111",
            "10101011010101",
            "01100110110011",
            "00011110001111",
        ])
    }

    #[test]
    fn shorten_keeps_rows_with_zero_at_i() {
        let g = tri(&["1010", "0101"]);
        let s = shorten(&g, 0).unwrap();
        assert_eq!(s.kept_rows, vec![1]);
        assert_eq!(s.matrix, BitMatrix::from_strs(&["101"]).unwrap());
        assert_eq!((s.odd_count, s.even_count), (0, 1));
    }

    #[test]
    fn shorten_of_rref_5x16_matches_row_filter() {
        // Column 0 of the reduced matrix has a single 1 (row 0), so the
        // row-filter shortening keeps the other four rows.
        let g16 = BitMatrix::from_strs(&[
            "1111111111111111",
            "0100011100001111",
            "0010010011010111",
            "0001001010111011",
            "0000100101111101",
        ])
        .unwrap();
        let (reduced, _) = g16.rref();
        let g = TriMatrix::partition_rows(reduced).unwrap();
        let s = shorten(&g, 0).unwrap();
        assert_eq!(s.kept_rows, vec![1, 2, 3, 4]);
        assert_eq!(s.matrix.nrows(), 4);
        assert!(check_trimatrix(&s.matrix).is_ok());
        assert!(!s.parameter_rule_applies()); // no odd rows survive
    }

    #[test]
    fn shorten_result_is_triorthogonal_even_when_degenerate() {
        let g = tri_5x14();
        for i in 0..g.n() {
            let s = shorten(&g, i).unwrap();
            assert!(check_trimatrix(&s.matrix).is_ok());
        }
    }

    #[test]
    fn extend_5x14_at_second_odd_row_gives_the_15_column_matrix() {
        let g = tri_5x14();
        let e = extend(&g, 1).unwrap();
        let expected = BitMatrix::from_strs(&[
            "011111110000000",
            "100000001111111",
            "010101011010101",
            "001100110110011",
            "000011110001111",
        ])
        .unwrap();
        assert_eq!(e.matrix(), &expected);
        assert_eq!(e.k(), 1);
    }

    #[test]
    fn extend_at_even_row_raises_k() {
        let g = tri_5x14();
        assert_eq!(g.k(), 2);
        let e = extend(&g, 3).unwrap();
        assert_eq!(e.k(), 3);
    }

    #[test]
    fn extend_matching_stays_triorthogonal() {
        let g = tri(&["1010", "0101"]);
        let e = extend(&g, 0).unwrap();
        assert_eq!(
            e.matrix(),
            &BitMatrix::from_strs(&["11010", "00101"]).unwrap()
        );
    }

    #[test]
    fn extend_append_flag_places_column_last() {
        let g = tri(&["1010", "0101"]);
        let e = extend_at(&g, 0, true).unwrap();
        assert_eq!(
            e.matrix(),
            &BitMatrix::from_strs(&["10101", "01010"]).unwrap()
        );
    }

    #[test]
    fn shorten_inverts_extend() {
        let g = tri_5x14();
        for i in 0..g.num_rows() {
            let e = extend(&g, i).unwrap();
            let s = shorten(&e, 0).unwrap();
            // Every row except row i survives, with the new column removed.
            let expected: Vec<usize> = (0..g.num_rows()).filter(|&r| r != i).collect();
            assert_eq!(s.kept_rows, expected);
            for (out_row, &orig) in s.matrix.rows().iter().zip(&expected) {
                assert_eq!(out_row, g.matrix().row(orig));
            }
        }
    }

    #[test]
    fn concat_requires_equal_row_counts() {
        let a = BitMatrix::identity(2);
        let b = BitMatrix::identity(3);
        assert!(concat_columns(&a, &b).is_err());
    }

    #[test]
    fn concat_examples() {
        let a = matching_matrix(2);
        let g = concat_columns(&a, &a).unwrap();
        assert!(check_trimatrix(&g).is_ok());
        let zeros = BitMatrix::zeros(2, 3);
        assert!(check_trimatrix(&concat_columns(&a, &zeros).unwrap()).is_ok());
    }

    #[test]
    fn block_diag_empty_identity() {
        let b = matching_matrix(2);
        assert_eq!(block_diag(&BitMatrix::empty(0), &b), b);
    }

    #[test]
    fn direct_sum_params_rule() {
        let pa = CodeParams::exact(15, 1, 3);
        let pb = CodeParams::exact(14, 2, 2);
        assert_eq!(
            direct_sum_params(&pa, &pb).unwrap(),
            CodeParams::exact(29, 3, 2)
        );
        assert_eq!(
            direct_sum_params(&pa, &pa).unwrap(),
            CodeParams::exact(30, 2, 3)
        );
        let zero_k = CodeParams::exact(6, 0, 1);
        assert!(direct_sum_params(&pa, &zero_k).is_err());
    }

    #[test]
    fn plotkin_variants_shapes_and_closure() {
        let g = tri_5x14();
        let p = plotkin_variants(&g);
        assert_eq!(p.prime.nrows(), 5);
        assert_eq!(p.double_prime.nrows(), 5);
        assert_eq!(p.prime.ncols(), 28);
        assert!(check_trimatrix(&p.prime).is_ok());
        assert!(check_trimatrix(&p.double_prime).is_ok());
        // The prime variant has only even rows: it spans a triorthogonal space.
        assert!(p.prime.rows().iter().all(|r| r.weight() % 2 == 0));
        assert!(check_trispace(&LinearCode::from_span(&p.prime)));
        // The doubled variant equals [O over G0 | G1 over G0].
        let left = BitMatrix::vstack(&BitMatrix::zeros(g.k(), g.n()), &g.even_rows()).unwrap();
        let right = BitMatrix::vstack(&g.odd_rows(), &g.even_rows()).unwrap();
        assert_eq!(p.double_prime, concat_columns(&left, &right).unwrap());
    }

    #[test]
    fn plotkin_variants_with_no_odd_rows() {
        let g = tri(&["1010", "0101"]);
        assert_eq!(g.k(), 0);
        let p = plotkin_variants(&g);
        assert!(check_trimatrix(&p.prime).is_ok());
        assert!(check_trimatrix(&p.double_prime).is_ok());
    }

    #[test]
    fn row_pair_sum_examples() {
        let g = matching_matrix(2);
        let s = row_pair_sum(&g, &[0], &[1]).unwrap();
        assert_eq!(s, BitMatrix::from_strs(&["1111"]).unwrap());

        let empty = row_pair_sum(&g, &[], &[]).unwrap();
        assert_eq!(empty.nrows(), 0);

        assert!(row_pair_sum(&g, &[0], &[0]).is_err());
        assert!(row_pair_sum(&g, &[0, 1], &[1, 0]).is_err());
    }

    #[test]
    fn building_up_tiny_example() {
        let g0 = matching_matrix(1);
        let x = BitVec::from_str01("10").unwrap();
        let b = building_up(&g0, &x).unwrap();
        assert_eq!(
            b,
            BitMatrix::from_strs(&["110010", "101011"]).unwrap()
        );
        assert!(check_trimatrix(&b).is_ok());
    }

    #[test]
    fn building_up_zero_and_ones_vectors() {
        let g0 = matching_matrix(2);
        let zero = BitVec::zeros(4);
        let b = building_up(&g0, &zero).unwrap();
        assert_eq!(b.row(0), &BitVec::from_str01("111100000000").unwrap());
        for (i, g) in g0.rows().iter().enumerate() {
            assert_eq!(
                b.row(i + 1),
                &BitVec::zeros(8).concat(g),
                "y_i must vanish when x = 0"
            );
        }

        let ones = BitVec::ones(4);
        let b = building_up(&g0, &ones).unwrap();
        for (i, g) in g0.rows().iter().enumerate() {
            assert_eq!(b.row(i + 1), &g.concat(g).concat(g));
        }
    }

    #[test]
    fn building_up_length_mismatch() {
        let g0 = matching_matrix(2);
        assert!(building_up(&g0, &BitVec::zeros(3)).is_err());
    }

    #[test]
    fn pad_shape_and_errors() {
        let g = tri_5x14();
        let padded = pad_with_selfdual(&g, 12).unwrap();
        assert_eq!((padded.n(), padded.k()), (38, 2));

        assert!(pad_with_selfdual(&g, 0).is_err());
        let no_odd = tri(&["1010", "0101"]);
        assert!(pad_with_selfdual(&no_odd, 1).is_err());
    }

    #[test]
    fn shorten_space_matching() {
        let space = TriSpace::new(LinearCode::from_span(&matching_matrix(2))).unwrap();
        let s = shorten_space(&space, 0).unwrap();
        assert_eq!(s.code().dim(), 1);
        assert_eq!(
            s.code(),
            &LinearCode::from_span(&BitMatrix::from_strs(&["101"]).unwrap())
        );
        assert!(!s.is_unital());
    }

    #[test]
    fn shorten_space_at_all_zero_column_keeps_dimension() {
        let m = BitMatrix::from_strs(&["01010", "00101"]).unwrap();
        let space = TriSpace::new(LinearCode::from_span(&m)).unwrap();
        let s = shorten_space(&space, 0).unwrap();
        assert_eq!(s.code().dim(), 2);
    }

    #[test]
    fn shorten_space_distance_does_not_decrease() {
        let space = TriSpace::new(LinearCode::from_span(&matching_matrix(3))).unwrap();
        let d = space.code().min_weight(LIMIT).unwrap();
        for i in 0..6 {
            let s = shorten_space(&space, i).unwrap();
            if s.code().dim() > 0 {
                assert!(s.code().min_weight(LIMIT).unwrap() >= d);
            }
        }
    }

    #[test]
    fn plotkin_sum_distance_rule() {
        // d = min(2*d1, d2) on a pair where each branch is the minimum once.
        let c1 = LinearCode::from_span(&BitMatrix::from_strs(&["1111000"]).unwrap());
        let c2 = LinearCode::from_span(&BitMatrix::from_strs(&["1110000", "0001111"]).unwrap());
        let p = plotkin_sum(&c1, &c2).unwrap();
        assert_eq!(p.length(), 14);
        assert_eq!(p.dim(), 3);
        let d1 = c1.min_weight(LIMIT).unwrap();
        let d2 = c2.min_weight(LIMIT).unwrap();
        assert_eq!(p.min_weight(LIMIT).unwrap(), (2 * d1).min(d2));
    }
}
