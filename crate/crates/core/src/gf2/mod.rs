//! Bit-packed linear algebra over GF(2): the substrate everything else
//! computes on.

mod bitmatrix;
mod bitvec;
mod lincode;
mod solve;

pub use bitmatrix::BitMatrix;
pub use bitvec::BitVec;
pub use lincode::{CodewordIter, LinearCode};
pub use solve::{solve_affine, AffineOutcome, AffineSolution, SolutionIter};

pub(crate) use lincode::enumeration_count;
