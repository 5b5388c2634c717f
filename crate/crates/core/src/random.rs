//! Seeded generators for self-dual codes and triorthogonal matrices, used by
//! the randomized verification suites. All output is a deterministic
//! function of the caller's RNG state.

use crate::constructions::matching_matrix;
use crate::error::Result;
use crate::gf2::{BitMatrix, BitVec, LinearCode};
use crate::selfdual::{greedy_subspace_search, Policy, SelfDualCode};
use crate::triortho::{space_to_trimatrix, TriMatrix};
use rand::Rng;

/// A random even-weight vector, never zero.
pub fn random_even_vector<R: Rng>(rng: &mut R, len: usize) -> BitVec {
    loop {
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            if rng.gen::<bool>() {
                v.set(i, true);
            }
        }
        if v.weight() % 2 == 1 {
            // flip a random coordinate to fix parity
            v.flip(rng.gen_range(0..len));
        }
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random self-dual code of even length, obtained from the matching code by
/// repeated neighbor moves: pick an even-weight vector `v` outside the code
/// and replace the code by `(C ∩ v⊥) + <v>`, which is again self-dual.
pub fn random_selfdual_code<R: Rng>(rng: &mut R, len: usize, moves: usize) -> Result<SelfDualCode> {
    assert!(len >= 2 && len % 2 == 0, "length must be even and positive");
    let mut code = LinearCode::from_span(&matching_matrix(len / 2));
    for _ in 0..moves {
        let v = random_even_vector(rng, len);
        if code.contains(&v)? {
            continue;
        }
        // Rows of the basis orthogonal to v, with one non-orthogonal row
        // (if any) used to fix the others.
        let mut rows: Vec<BitVec> = code.basis().rows().to_vec();
        if let Some(lead) = rows.iter().position(|r| r.parity_and(&v)) {
            let lead_row = rows.remove(lead);
            for r in &mut rows {
                if r.parity_and(&v) {
                    r.xor_assign(&lead_row);
                }
            }
        }
        rows.push(v);
        code = LinearCode::from_span(&BitMatrix::from_rows(rows)?);
        debug_assert_eq!(code.dim(), len / 2);
    }
    SelfDualCode::new(code.basis().clone())
}

/// Random triorthogonal matrix with at least one odd-weight row, produced by
/// carving a triorthogonal subspace out of a random self-dual code and
/// normalizing it. `half_len` bounds the code length (`2 * half_len`); the
/// resulting matrix has `2*half_len - k` columns.
pub fn random_trimatrix<R: Rng>(rng: &mut R, half_len: usize, max_k: usize) -> Result<TriMatrix> {
    loop {
        let moves = rng.gen_range(2..8);
        let code = random_selfdual_code(rng, 2 * half_len, moves)?;
        let ones = BitVec::ones(code.length());
        let basis = code.code().basis().rows().to_vec();
        let start = basis
            .iter()
            .find(|r| **r != ones)
            .expect("dim >= 2 has a non-ones basis vector")
            .clone();
        let state = greedy_subspace_search(&code, &ones, &start, Policy::FirstFound, 1 << 22)?;
        let space = LinearCode::from_span(&state.as_matrix());
        if space.dim() < 2 {
            continue;
        }
        let k = rng.gen_range(1..=space.dim().min(max_k));
        let norm = space_to_trimatrix(&space, k)?;
        if norm.tri.k() >= 1 {
            return Ok(norm.tri);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selfdual::is_selfdual;
    use crate::triortho::check_trimatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn neighbor_moves_stay_selfdual() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in [4usize, 6, 8, 10, 12] {
            let c = random_selfdual_code(&mut rng, len, 6).unwrap();
            assert!(is_selfdual(c.code().basis()));
            assert_eq!(c.length(), len);
        }
    }

    #[test]
    fn random_trimatrices_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let t = random_trimatrix(&mut rng, 5, 2).unwrap();
            assert!(t.k() >= 1);
            assert!(check_trimatrix(t.matrix()).is_ok());
        }
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let a = random_trimatrix(&mut ChaCha8Rng::seed_from_u64(3), 4, 2).unwrap();
        let b = random_trimatrix(&mut ChaCha8Rng::seed_from_u64(3), 4, 2).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }
}
