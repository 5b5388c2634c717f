//! Algebraic invariants checked on randomized inputs, plus the lemma-level
//! identities that anchor the parameter rules.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use trio_core::constructions::{block_diag, plotkin_double_bound, plotkin_variants};
use trio_core::gf2::{solve_affine, AffineOutcome, BitMatrix, BitVec, LinearCode};
use trio_core::params::exact_dz;
use trio_core::random::random_trimatrix;
use trio_core::selfdual::g0_never_selfdual;
use trio_core::triortho::{check_trispace, space_to_trimatrix, TriMatrix};
use trio_core::{fixtures, DEFAULT_LIMIT};

fn three_vectors() -> impl Strategy<Value = (BitVec, BitVec, BitVec)> {
    (1usize..160).prop_flat_map(|n| {
        let v = proptest::collection::vec(any::<bool>(), n);
        (v.clone(), v.clone(), v).prop_map(|(a, b, c)| {
            (
                BitVec::from_bools(&a),
                BitVec::from_bools(&b),
                BitVec::from_bools(&c),
            )
        })
    })
}

fn small_matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..7, 1usize..10).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows).prop_map(
            |rows| {
                BitMatrix::from_rows(rows.iter().map(|r| BitVec::from_bools(r)).collect())
                    .expect("equal lengths")
            },
        )
    })
}

fn brute_span(m: &BitMatrix) -> HashSet<BitVec> {
    let mut out = HashSet::new();
    for mask in 0u32..1 << m.nrows() {
        let mut v = BitVec::zeros(m.ncols());
        for (i, row) in m.rows().iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.xor_assign(row);
            }
        }
        out.insert(v);
    }
    out
}

proptest! {
    #[test]
    fn wedge_identities((a, b, c) in three_vectors()) {
        // x ∧ x = x and x ∧ 1 = x
        prop_assert_eq!(a.wedge(&a).unwrap(), a.clone());
        prop_assert_eq!(a.wedge(&BitVec::ones(a.len())).unwrap(), a.clone());
        // distributivity over addition
        let lhs = a.wedge(&b.add(&c).unwrap()).unwrap();
        let rhs = a.wedge(&b).unwrap().add(&a.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn overlap_parity_is_additive((a, b, c) in three_vectors()) {
        let combined = a.wedge(&b.add(&c).unwrap()).unwrap().weight();
        let split = a.wedge(&b).unwrap().weight() + a.wedge(&c).unwrap().weight();
        prop_assert_eq!(combined % 2, split % 2);
    }

    #[test]
    fn rref_preserves_rank_and_span(m in small_matrix()) {
        let (r, pivots) = m.rref();
        prop_assert_eq!(r.nrows(), pivots.len());
        prop_assert_eq!(r.rank(), m.rank());
        prop_assert_eq!(brute_span(&m), brute_span(&r));
        let (r2, p2) = r.rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(pivots, p2);
    }

    #[test]
    fn dual_is_an_involution(m in small_matrix()) {
        let c = LinearCode::from_span(&m);
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert_eq!(c.dual().dim(), c.length() - c.dim());
    }

    #[test]
    fn nested_codes_reverse_under_dual(m in small_matrix()) {
        let big = LinearCode::from_span(&m);
        prop_assume!(big.dim() >= 2);
        // Drop the last basis row for a strict subcode: small ⊆ big flips
        // to dual(big) ⊆ dual(small).
        let rows = big.basis().rows()[..big.dim() - 1].to_vec();
        let small = LinearCode::from_span(&BitMatrix::from_rows(rows).unwrap());
        prop_assert!(small.dual().contains_code(&big.dual()).unwrap());
        if small.dim() > 0 {
            let d_small = small.min_weight(DEFAULT_LIMIT).unwrap();
            let d_big = big.min_weight(DEFAULT_LIMIT).unwrap();
            prop_assert!(d_small >= d_big);
        }
    }

    #[test]
    fn min_weight_matches_brute_force(m in small_matrix()) {
        let c = LinearCode::from_span(&m);
        prop_assume!(c.dim() >= 1);
        let brute = brute_span(&m)
            .into_iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.weight())
            .min()
            .unwrap();
        prop_assert_eq!(c.min_weight(DEFAULT_LIMIT).unwrap(), brute);
    }

    #[test]
    fn enumeration_is_exactly_the_span(m in small_matrix()) {
        let c = LinearCode::from_span(&m);
        let listed: HashSet<BitVec> = c.codewords(DEFAULT_LIMIT).unwrap().collect();
        prop_assert_eq!(listed.len() as u64, 1u64 << c.dim());
        prop_assert_eq!(listed, brute_span(&m));
    }

    #[test]
    fn affine_solutions_check_out((m, rhs_bits) in small_matrix().prop_flat_map(|m| {
        let rows = m.nrows();
        (Just(m), proptest::collection::vec(any::<bool>(), rows..=rows))
    })) {
        let rhs = BitVec::from_bools(&rhs_bits);
        match solve_affine(&m, &rhs).unwrap() {
            AffineOutcome::Solution(sol) => {
                for x in sol.iter().take(64) {
                    for (i, row) in m.rows().iter().enumerate() {
                        prop_assert_eq!(row.parity_and(&x), rhs.get(i));
                    }
                }
            }
            AffineOutcome::Inconsistent => {
                // No vector in the full space can satisfy the system.
                prop_assume!(m.ncols() <= 8);
                for bits in 0u32..1 << m.ncols() {
                    let x = BitVec::from_bools(
                        &(0..m.ncols()).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>(),
                    );
                    let ok = m
                        .rows()
                        .iter()
                        .enumerate()
                        .all(|(i, row)| row.parity_and(&x) == rhs.get(i));
                    prop_assert!(!ok);
                }
            }
        }
    }
}

/// Set-difference weight helper over explicit codeword sets.
fn wt_diff(big: &HashSet<BitVec>, small: &HashSet<BitVec>) -> usize {
    big.iter()
        .filter(|v| !small.contains(*v) && !v.is_zero())
        .map(|v| v.weight())
        .min()
        .expect("strict inclusion leaves a nonzero difference")
}

#[test]
fn direct_sum_difference_weight_identity() {
    // wt((A⊕B)\(C⊕D)) = min(wt(A\C), wt(B\D)) for strict subcodes C ⊊ A,
    // D ⊊ B, checked by exhaustive enumeration.
    let mut rng = ChaCha8Rng::seed_from_u64(0x11);
    for _ in 0..40 {
        let (a, c) = random_nested_pair(&mut rng, 7);
        let (b, d) = random_nested_pair(&mut rng, 6);
        let sa = brute_span(a.basis());
        let sc = brute_span(c.basis());
        let sb = brute_span(b.basis());
        let sd = brute_span(d.basis());
        let mut sum_big = HashSet::new();
        let mut sum_small = HashSet::new();
        for x in &sa {
            for y in &sb {
                sum_big.insert(x.concat(y));
            }
        }
        for x in &sc {
            for y in &sd {
                sum_small.insert(x.concat(y));
            }
        }
        assert_eq!(
            wt_diff(&sum_big, &sum_small),
            wt_diff(&sa, &sc).min(wt_diff(&sb, &sd))
        );
    }
}

fn random_nested_pair<R: Rng>(rng: &mut R, len: usize) -> (LinearCode, LinearCode) {
    loop {
        let rows: Vec<BitVec> = (0..rng.gen_range(2..=4))
            .map(|_| {
                let mut v = BitVec::zeros(len);
                for i in 0..len {
                    if rng.gen::<bool>() {
                        v.set(i, true);
                    }
                }
                v
            })
            .collect();
        let big = LinearCode::from_span(&BitMatrix::from_rows(rows).unwrap());
        if big.dim() < 2 {
            continue;
        }
        let small_rows = big.basis().rows()[..big.dim() - 1].to_vec();
        let small = LinearCode::from_span(&BitMatrix::from_rows(small_rows).unwrap());
        return (big, small);
    }
}

#[test]
fn dual_of_block_diagonal_is_block_diagonal_of_duals() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x22);
    for _ in 0..30 {
        let (a, _) = random_nested_pair(&mut rng, 6);
        let (b, _) = random_nested_pair(&mut rng, 5);
        let summed = LinearCode::from_span(&block_diag(a.basis(), b.basis()));
        let dual_sum = LinearCode::from_span(&block_diag(
            a.dual().basis(),
            b.dual().basis(),
        ));
        assert_eq!(summed.dual(), dual_sum);
    }
}

#[test]
fn plotkin_double_distance_respects_the_bound() {
    // On the 14-column reference matrix and on random small cases, the
    // doubled variant's exact distance dominates the dual bound.
    let g = fixtures::tri14();
    let doubled = TriMatrix::partition_rows(plotkin_variants(&g).double_prime).unwrap();
    assert_eq!((doubled.n(), doubled.k()), (28, 2));
    let bound = plotkin_double_bound(&g, DEFAULT_LIMIT).unwrap();
    let exact = exact_dz(&doubled, DEFAULT_LIMIT).unwrap();
    assert!(exact >= bound, "exact {exact} vs bound {bound}");
    assert_eq!((exact, bound), (2, 2));

    let mut rng = ChaCha8Rng::seed_from_u64(0x33);
    for _ in 0..10 {
        let g = random_trimatrix(&mut rng, 4, 2).unwrap();
        let doubled = TriMatrix::partition_rows(plotkin_variants(&g).double_prime).unwrap();
        let bound = plotkin_double_bound(&g, DEFAULT_LIMIT).unwrap();
        let exact = exact_dz(&doubled, DEFAULT_LIMIT).unwrap();
        assert!(exact >= bound);
    }
}

#[test]
fn even_row_span_is_never_selfdual() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x44);
    for _ in 0..40 {
        let g = random_trimatrix(&mut rng, 4, 2).unwrap();
        assert_ne!(g0_never_selfdual(g.matrix()).unwrap(), Some(true));
    }
}

#[test]
fn normalization_reproduces_the_column_stripped_references() {
    let space = LinearCode::from_span(fixtures::tri16().matrix());
    assert!(check_trispace(&space));
    let norm1 = space_to_trimatrix(&space, 1).unwrap();
    assert_eq!(norm1.tri.matrix(), fixtures::tri15().matrix());
    assert_eq!(norm1.removed_columns, vec![0]);
    let norm2 = space_to_trimatrix(&space, 2).unwrap();
    assert_eq!(norm2.tri.matrix(), fixtures::tri14b().matrix());
    assert_eq!(norm2.removed_columns, vec![0, 1]);
}

#[test]
fn selfdual8_code_has_distance_four() {
    // All 16 codewords enumerated; the brute span agrees.
    let code = LinearCode::from_span(&fixtures::selfdual8());
    assert_eq!(code.min_weight(DEFAULT_LIMIT).unwrap(), 4);
    let brute = brute_span(&fixtures::selfdual8());
    assert_eq!(brute.len(), 16);
    assert_eq!(
        brute.iter().filter(|v| !v.is_zero()).map(BitVec::weight).min(),
        Some(4)
    );
}

#[test]
fn even_dual_of_the_15_column_fixture_has_2048_words() {
    let dual = fixtures::tri15().even_space().dual();
    assert_eq!(dual.dim(), 11);
    assert_eq!(dual.codewords(DEFAULT_LIMIT).unwrap().count(), 2048);
}

#[test]
fn any_basis_of_a_trispace_is_a_triorthogonal_matrix() {
    use trio_core::triortho::check_trimatrix;
    let mut rng = ChaCha8Rng::seed_from_u64(0x55);
    let space = LinearCode::from_span(fixtures::tri16().matrix());
    assert!(check_trispace(&space));
    for _ in 0..15 {
        // Random invertible row mixes give another basis of the same space.
        let mut rows = space.basis().rows().to_vec();
        for _ in 0..12 {
            let i = rng.gen_range(0..rows.len());
            let j = rng.gen_range(0..rows.len());
            if i != j {
                let src = rows[j].clone();
                rows[i].xor_assign(&src);
            }
        }
        let basis = BitMatrix::from_rows(rows).unwrap();
        assert_eq!(basis.rank(), space.dim());
        assert!(check_trimatrix(&basis).is_ok());
    }
}

#[test]
fn extension_reference_pair_agrees() {
    // The 15-column fixture is exactly the extension of the 14-column one.
    let g = fixtures::tri14();
    let extended = trio_core::constructions::extend(&g, 1).unwrap();
    assert_eq!(extended.matrix(), fixtures::tri15_ext().matrix());
    assert_eq!(exact_dz(&extended, DEFAULT_LIMIT).unwrap(), 3);
}
