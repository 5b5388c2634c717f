//! Construction, transformation, search, and evaluation of binary
//! triorthogonal matrices and their code parameters `[[n, k, d_Z]]`.
//!
//! A binary matrix is *triorthogonal* when every pair and every triple of
//! distinct rows overlaps in an even number of positions. Partitioning its
//! rows by weight parity presents a CSS code: `n` columns carry `k` logical
//! qubits, one per odd-weight row, and the distance `d_Z` is the minimum
//! weight over vectors orthogonal to the even rows but not to all rows.
//! Smaller `γ = log(n/k)/log(d_Z)` means cheaper magic-state distillation,
//! which is what makes these matrices worth hunting for.
//!
//! The crate provides:
//!
//! - [`gf2`] — bit-packed vectors, matrices, RREF, duals, affine solving,
//!   and exhaustive codeword enumeration;
//! - [`triortho`] — validation of triorthogonal matrices and spaces, and
//!   the normalization turning a space into a matrix with odd rows;
//! - [`constructions`] — shortening, extension, concatenation, direct sums,
//!   Plotkin-style variants, row-pair sums, building-up, and padding;
//! - [`selfdual`] — the greedy search for large triorthogonal subspaces of
//!   self-dual codes, with its characterizations and dimension bounds;
//! - [`params`] — the exact `d_Z` oracle and compositional parameter rules;
//! - [`table`] — closure of the shipped seeds into a best-distance table;
//! - [`io`] / [`recipe`] — the matrix text format and the pipeline script;
//! - [`verify`] — the reproduction suite behind the `reproduce` command.

pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod io;
pub mod params;
pub mod random;
pub mod recipe;
pub mod selfdual;
pub mod table;
pub mod triortho;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec, LinearCode};
pub use params::{CodeParams, DzValue};
pub use triortho::{TriMatrix, TriSpace};

/// Default exhaustive-enumeration budget: `2^26` codewords.
pub const DEFAULT_LIMIT: u64 = 1 << 26;
