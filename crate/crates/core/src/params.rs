//! Triorthogonal-code parameters `[[n, k, d_Z]]` and the distillation
//! exponent γ.
//!
//! `d_Z` is the minimum weight over the dual of the even-row span, excluding
//! the dual of the full row span. It is computed exactly by enumerating the
//! even-row dual through a Gray-code walk: each codeword is one XOR away from
//! the previous one, and membership in the full-span dual is tracked by a
//! parity mask against the odd rows only (a vector orthogonal to the even
//! rows lies in the full dual iff it is also orthogonal to every odd row).

use crate::error::{Error, Result};
use crate::gf2::{enumeration_count, BitMatrix, BitVec};
use crate::triortho::TriMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// A distance value that may be exact, only bounded below, or unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DzValue {
    Exact(usize),
    AtLeast(usize),
    Unknown,
}

impl DzValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            DzValue::Exact(d) => Some(*d),
            _ => None,
        }
    }

    /// Meet of two distance values under `min`: exact when the result is
    /// determined, a lower bound when only bounds are known.
    pub fn min(a: &DzValue, b: &DzValue) -> DzValue {
        use DzValue::*;
        match (*a, *b) {
            (Exact(x), Exact(y)) => Exact(x.min(y)),
            (Exact(x), AtLeast(y)) | (AtLeast(y), Exact(x)) => {
                if x <= y {
                    Exact(x)
                } else {
                    AtLeast(y)
                }
            }
            (AtLeast(x), AtLeast(y)) => AtLeast(x.min(y)),
            (Unknown, _) | (_, Unknown) => Unknown,
        }
    }
}

impl fmt::Display for DzValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DzValue::Exact(d) => write!(f, "{d}"),
            DzValue::AtLeast(d) => write!(f, ">={d}"),
            DzValue::Unknown => write!(f, "?"),
        }
    }
}

/// The triple `[[n, k, d_Z]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub dz: DzValue,
}

impl CodeParams {
    pub fn exact(n: usize, k: usize, dz: usize) -> Self {
        Self {
            n,
            k,
            dz: DzValue::Exact(dz),
        }
    }

    /// The distillation exponent `γ = log(n/k) / log(d_Z)`, defined for
    /// `k ≥ 1` and exact `d_Z ≥ 2`.
    pub fn gamma(&self) -> Result<f64> {
        let d = match self.dz {
            DzValue::Exact(d) => d,
            _ => {
                return Err(Error::Parameter(
                    "gamma needs an exact distance".into(),
                ))
            }
        };
        if self.k == 0 || d < 2 {
            return Err(Error::Parameter(
                "gamma is defined only for k >= 1 and d_Z >= 2".into(),
            ));
        }
        Ok((self.n as f64 / self.k as f64).ln() / (d as f64).ln())
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.dz)
    }
}

/// γ for the hereditary family parameterized by an even `k`:
/// `log2((3k + 8) / k)`.
pub fn family_gamma(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Parameter("family gamma needs k >= 1".into()));
    }
    Ok(((3 * k + 8) as f64 / k as f64).log2())
}

/// Number of odd-weight rows, i.e. the logical-qubit count.
pub fn logical_count(g: &TriMatrix) -> usize {
    g.k()
}

/// Dimension of the dual of the even-row span: the enumeration size driver
/// for [`exact_dz`] is `2^g0_dual_dim`.
pub fn g0_dual_dim(g: &TriMatrix) -> usize {
    g.n() - g.even_rows().rank()
}

/// Parameters of `g` with the distance computed exactly via [`exact_dz`].
pub fn params_of(g: &TriMatrix, limit: u64) -> Result<CodeParams> {
    Ok(CodeParams {
        n: g.n(),
        k: g.k(),
        dz: DzValue::Exact(exact_dz(g, limit)?),
    })
}

/// Exact `d_Z`: the minimum weight among vectors orthogonal to all even rows
/// but not to all rows. Needs `k ≥ 1` (otherwise the set is empty) and an
/// enumeration budget of `2^(n - rank(G₀)) ≤ limit`.
///
/// On budget overflow the error carries a non-exact upper bound obtained
/// from deterministically sampled codewords, when one was found.
pub fn exact_dz(g: &TriMatrix, limit: u64) -> Result<usize> {
    if g.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let even = g.even_rows();
    let kernel = even.kernel_basis();
    let odd = g.odd_rows();
    let dim = kernel.len();
    if let Err(Error::BudgetExceeded { needed_log2, limit, .. }) =
        enumeration_count(dim, limit, None)
    {
        return Err(Error::BudgetExceeded {
            needed_log2,
            limit,
            upper_bound: sample_dz_upper_bound(&kernel, &odd),
        });
    }
    let total = 1u64 << dim;

    // Per-basis-vector parity masks against the odd rows: flipping kernel
    // vector j toggles the mask bits where |b_j ∧ g1_t| is odd. The current
    // word is outside the full-span dual iff its mask is nonzero.
    if odd.nrows() > 64 {
        return Err(Error::Parameter(format!(
            "{} odd rows exceed the 64-row parity mask",
            odd.nrows()
        )));
    }
    let masks: Vec<u64> = kernel
        .iter()
        .map(|b| {
            odd.rows()
                .iter()
                .enumerate()
                .filter(|(_, g1)| b.parity_and(g1))
                .fold(0u64, |m, (t, _)| m | 1 << t)
        })
        .collect();

    let threads = if total >= 1 << 20 {
        std::thread::available_parallelism()
            .map(|p| p.get().min(8))
            .unwrap_or(1)
    } else {
        1
    };
    if threads <= 1 {
        return Ok(dz_scan_range(&kernel, &masks, g.n(), 0, total)
            .expect("k >= 1 guarantees a nonempty difference"));
    }
    let chunk = total / threads as u64;
    let best = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads as u64 {
            let lo = t * chunk;
            let hi = if t + 1 == threads as u64 { total } else { lo + chunk };
            let kernel = &kernel;
            let masks = &masks;
            let n = g.n();
            handles.push(scope.spawn(move || dz_scan_range(kernel, masks, n, lo, hi)));
        }
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("scan worker panicked"))
            .min()
    });
    Ok(best.expect("k >= 1 guarantees a nonempty difference"))
}

/// Scans Gray-walk counter positions `[lo, hi)`; the reduction over chunks is
/// an order-independent min, so any partition gives the same answer.
fn dz_scan_range(
    kernel: &[BitVec],
    masks: &[u64],
    n: usize,
    lo: u64,
    hi: u64,
) -> Option<usize> {
    let mut cur = BitVec::zeros(n);
    let mut mask = 0u64;
    // Seed the walk state at counter position lo: the subset visited there
    // is gray(lo) = lo ^ (lo >> 1).
    let subset = lo ^ (lo >> 1);
    for j in 0..kernel.len() {
        if subset >> j & 1 == 1 {
            cur.xor_assign(&kernel[j]);
            mask ^= masks[j];
        }
    }
    let mut best: Option<usize> = if lo != 0 && mask != 0 {
        Some(cur.weight())
    } else {
        None
    };
    for i in lo + 1..hi {
        let flip = i.trailing_zeros() as usize;
        cur.xor_assign(&kernel[flip]);
        mask ^= masks[flip];
        if mask != 0 {
            let w = cur.weight();
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best
}

/// Deterministic sampling fallback when exhaustive enumeration is over
/// budget: random kernel combinations give codewords whose weights bound
/// `d_Z` from above, never below.
fn sample_dz_upper_bound(kernel: &[BitVec], odd: &BitMatrix) -> Option<usize> {
    if kernel.is_empty() {
        return None;
    }
    let n = kernel[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7210);
    let mut best: Option<usize> = None;
    for _ in 0..4096 {
        let mut w = BitVec::zeros(n);
        for b in kernel {
            if rng.gen::<bool>() {
                w.xor_assign(b);
            }
        }
        if odd.rows().iter().any(|g1| w.parity_and(g1)) {
            let weight = w.weight();
            if best.is_none_or(|b| weight < b) {
                best = Some(weight);
            }
        }
    }
    best
}

/// A construction tree over leaves with known parameters. Folding it applies
/// the parameter rules: block-diagonal sums take the minimum distance,
/// padding keeps it, extension and shortening give `(n, k)` but leave the
/// distance unknown (there is no rule; call [`exact_dz`] on the matrix).
#[derive(Debug, Clone)]
pub enum ParamRecipe {
    Leaf(CodeParams),
    DSum(Box<ParamRecipe>, Box<ParamRecipe>),
    Pad(Box<ParamRecipe>, usize),
    /// Extension at an odd-weight row: `[[n+1, k-1]]`.
    Extend(Box<ParamRecipe>),
    /// Shortening with the surviving odd-row count given.
    Shorten(Box<ParamRecipe>, usize),
}

/// Folds the parameter rules over a construction tree.
pub fn compositional_dz(recipe: &ParamRecipe) -> Result<CodeParams> {
    match recipe {
        ParamRecipe::Leaf(p) => Ok(*p),
        ParamRecipe::DSum(a, b) => {
            let pa = compositional_dz(a)?;
            let pb = compositional_dz(b)?;
            crate::constructions::direct_sum_params(&pa, &pb)
        }
        ParamRecipe::Pad(a, t) => {
            let pa = compositional_dz(a)?;
            if pa.k == 0 {
                return Err(Error::Parameter("padding rule needs k > 0".into()));
            }
            if *t < 1 {
                return Err(Error::Parameter("pad size t must be at least 1".into()));
            }
            Ok(CodeParams {
                n: pa.n + 2 * t,
                k: pa.k,
                dz: pa.dz,
            })
        }
        ParamRecipe::Extend(a) => {
            let pa = compositional_dz(a)?;
            if pa.k == 0 {
                return Err(Error::Parameter(
                    "extension rule needs an odd-weight row".into(),
                ));
            }
            Ok(CodeParams {
                n: pa.n + 1,
                k: pa.k - 1,
                dz: DzValue::Unknown,
            })
        }
        ParamRecipe::Shorten(a, surviving_k) => {
            let pa = compositional_dz(a)?;
            if pa.n == 0 {
                return Err(Error::Parameter("cannot shorten an empty code".into()));
            }
            Ok(CodeParams {
                n: pa.n - 1,
                k: *surviving_k,
                dz: DzValue::Unknown,
            })
        }
    }
}
