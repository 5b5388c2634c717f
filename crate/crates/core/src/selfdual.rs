//! Self-dual codes and the greedy search for large triorthogonal subspaces.
//!
//! A binary self-dual code is a `[2k, k]` code equal to its own dual. Its
//! row span is a triorthogonal space exactly when the wedge of any two
//! codewords stays inside the code, and exactly when the code is a column
//! permutation of the matching code spanned by `[I_k | I_k]`. For codes that
//! are not, the greedy search grows a linearly independent set `H` whose
//! span stays triorthogonal, one linear solve per step.

use crate::error::{Error, Result};
use crate::gf2::{solve_affine, AffineOutcome, BitMatrix, BitVec, LinearCode};
use crate::triortho::check_trispace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// True iff the rows span a self-dual code: even length, rank exactly half
/// the length, and every pair of rows (including each row with itself) has
/// even overlap.
pub fn is_selfdual(m: &BitMatrix) -> bool {
    if m.ncols() % 2 != 0 || m.ncols() == 0 {
        return false;
    }
    if m.rank() != m.ncols() / 2 {
        return false;
    }
    let rows = m.rows();
    for a in 0..rows.len() {
        for b in a..rows.len() {
            if rows[a].parity_and(&rows[b]) {
                return false;
            }
        }
    }
    true
}

/// A validated self-dual code, keeping both the caller's generator matrix
/// and the canonical row-span.
#[derive(Debug, Clone)]
pub struct SelfDualCode {
    generator: BitMatrix,
    code: LinearCode,
}

impl SelfDualCode {
    pub fn new(generator: BitMatrix) -> Result<Self> {
        if !is_selfdual(&generator) {
            return Err(Error::NotSelfDual(format!(
                "{}x{} generator fails the self-duality check",
                generator.nrows(),
                generator.ncols()
            )));
        }
        let code = LinearCode::from_span(&generator);
        // Every binary self-dual code contains the all-one vector.
        assert!(code.is_unital(), "self-dual code must contain the all-one vector");
        Ok(Self { generator, code })
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }

    /// First basis pair whose wedge falls outside the code, with the wedge
    /// itself as witness. `None` means the code is wedge-closed, which for a
    /// self-dual code is equivalent to being a triorthogonal space.
    pub fn wedge_closure_witness(&self) -> Option<(usize, usize, BitVec)> {
        let rows = self.code.basis().rows();
        for i in 0..rows.len() {
            for j in i..rows.len() {
                let w = rows[i].wedge(&rows[j]).expect("equal lengths");
                if !self.code.contains(&w).expect("equal lengths") {
                    return Some((i, j, w));
                }
            }
        }
        None
    }

    pub fn wedge_closed(&self) -> bool {
        self.wedge_closure_witness().is_none()
    }
}

/// Verdict of [`classify_selfdual_triortho`]. When the code is a
/// triorthogonal space, `witness[j]` gives the original position of column
/// `j` under a permutation carrying the code onto the span of `[I_k | I_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_trispace: bool,
    pub witness: Option<Vec<usize>>,
}

/// Decides whether a self-dual code is a triorthogonal space, cross-checking
/// the basis triple test against wedge closure, and produces the
/// column-permutation witness when it is.
///
/// A self-dual triorthogonal space has an RREF basis of disjoint weight-2
/// rows (a perfect matching of the coordinates); the witness permutation
/// sends each pair to positions `(i, k + i)`.
pub fn classify_selfdual_triortho(c: &SelfDualCode) -> Verdict {
    let is_trispace = check_trispace(c.code());
    let closed = c.wedge_closed();
    assert_eq!(
        is_trispace, closed,
        "triple test and wedge closure must agree on self-dual codes"
    );
    if !is_trispace {
        return Verdict {
            is_trispace,
            witness: None,
        };
    }
    let rows = c.code().basis().rows();
    let mut pairs = Vec::with_capacity(rows.len());
    for row in rows {
        assert_eq!(
            row.weight(),
            2,
            "a self-dual triorthogonal space has a weight-2 RREF basis"
        );
        let a = (0..row.len()).find(|&i| row.get(i)).expect("weight 2");
        let b = (a + 1..row.len()).find(|&i| row.get(i)).expect("weight 2");
        pairs.push((a, b));
    }
    let k = pairs.len();
    let mut witness = vec![0; 2 * k];
    for (i, (a, b)) in pairs.iter().enumerate() {
        witness[i] = *a;
        witness[k + i] = *b;
    }
    Verdict {
        is_trispace,
        witness: Some(witness),
    }
}

/// Falsification helper: whether the even-row span of a triorthogonal
/// matrix is self-dual. On the applicable shape (`n/2` even-weight rows over
/// `n` columns plus at least one odd row) the answer is always `false` — an
/// odd row would be orthogonal to a self-dual even span and hence inside it,
/// contradicting its parity. `Ok(None)` means the shape does not apply.
///
/// Takes a plain matrix because the applicable shape forces the even rows to
/// be linearly dependent, so it never occurs in a validated full-rank
/// triorthogonal matrix.
pub fn g0_never_selfdual(m: &BitMatrix) -> Result<Option<bool>> {
    let report = crate::triortho::check_trimatrix(m);
    if let Some(v) = report.first_violation {
        return Err(Error::NotTriorthogonal(v));
    }
    let even_rows: Vec<BitVec> = m
        .rows()
        .iter()
        .filter(|r| r.weight() % 2 == 0)
        .cloned()
        .collect();
    let odd_count = m.nrows() - even_rows.len();
    if odd_count == 0 || even_rows.len() * 2 != m.ncols() {
        return Ok(None);
    }
    let even = BitMatrix::from_rows(even_rows).expect("rows share length");
    Ok(Some(is_selfdual(&even)))
}

/// How a step of the greedy search picks among the admissible solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    /// First admissible solution in the deterministic enumeration order.
    #[default]
    FirstFound,
    /// Minimum-weight admissible solution; ties go to the earlier one.
    MinWeight,
    /// Uniformly random admissible solution from a seeded generator.
    Seeded(u64),
}

impl std::str::FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(Policy::FirstFound),
            "minweight" => Ok(Policy::MinWeight),
            other => match other.strip_prefix("seeded:") {
                Some(seed) => seed
                    .parse()
                    .map(Policy::Seeded)
                    .map_err(|_| Error::Parameter(format!("bad seed in policy {other:?}"))),
                None => Err(Error::Parameter(format!(
                    "unknown policy {other:?}; expected first, minweight, or seeded:N"
                ))),
            },
        }
    }
}

/// State of one greedy run: the independent set, its span, and the accepted
/// candidate per step.
#[derive(Debug, Clone)]
pub struct SearchState {
    members: Vec<BitVec>,
    span: LinearCode,
    trace: Vec<BitVec>,
}

impl SearchState {
    pub fn members(&self) -> &[BitVec] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn span(&self) -> &LinearCode {
        &self.span
    }

    /// Candidates accepted after the two starting codewords, in order.
    pub fn trace(&self) -> &[BitVec] {
        &self.trace
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.members.contains(v)
    }

    pub fn as_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.members.clone()).expect("members share length")
    }
}

/// Greedy growth of a triorthogonal subspace of a self-dual code, starting
/// from two distinct nonzero codewords.
///
/// Each step solves the homogeneous system whose rows are a basis of the
/// code (membership, since the code equals its dual) plus the wedge `α ∧ β`
/// of every unordered pair of distinct members of `H`. Solutions are
/// enumerated in counter order over the nullspace basis (particular solution
/// first); candidates already in the span of `H` are filtered out, since
/// independence is not a linear condition. The loop stops when no candidate
/// remains.
pub fn greedy_subspace_search(
    c: &SelfDualCode,
    y: &BitVec,
    z: &BitVec,
    policy: Policy,
    limit: u64,
) -> Result<SearchState> {
    for (name, v) in [("y", y), ("z", z)] {
        if v.len() != c.length() {
            return Err(Error::DimensionMismatch {
                left: c.length(),
                right: v.len(),
            });
        }
        if v.is_zero() {
            return Err(Error::Parameter(format!("starting codeword {name} is zero")));
        }
        if !c.code().contains(v)? {
            return Err(Error::Parameter(format!(
                "starting codeword {name} is not in the code"
            )));
        }
    }
    if y == z {
        return Err(Error::Parameter("starting codewords must differ".into()));
    }

    let mut members = vec![y.clone(), z.clone()];
    let mut trace = Vec::new();
    loop {
        let span = LinearCode::from_span(
            &BitMatrix::from_rows(members.clone()).expect("members share length"),
        );
        let mut constraints = c.code().basis().clone();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                constraints.push_row(members[i].wedge(&members[j])?)?;
            }
        }
        let rhs = BitVec::zeros(constraints.nrows());
        let outcome = solve_affine(&constraints, &rhs)?;
        let AffineOutcome::Solution(sol) = outcome else {
            unreachable!("homogeneous systems are always consistent");
        };
        if sol.count().is_none_or(|count| count > limit) {
            return Err(Error::BudgetExceeded {
                needed_log2: sol.nullspace.len() as u32,
                limit,
                upper_bound: None,
            });
        }
        let picked = match policy {
            Policy::FirstFound => sol
                .iter()
                .find(|x| !span.contains(x).expect("length matches")),
            Policy::MinWeight => sol
                .iter()
                .filter(|x| !span.contains(x).expect("length matches"))
                .min_by_key(|x| x.weight()),
            Policy::Seeded(seed) => {
                let candidates: Vec<BitVec> = sol
                    .iter()
                    .filter(|x| !span.contains(x).expect("length matches"))
                    .collect();
                if candidates.is_empty() {
                    None
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ members.len() as u64);
                    let idx = rng.gen_range(0..candidates.len());
                    Some(candidates[idx].clone())
                }
            }
        };
        match picked {
            None => {
                return Ok(SearchState {
                    members,
                    span,
                    trace,
                })
            }
            Some(x) => {
                trace.push(x.clone());
                members.push(x);
            }
        }
    }
}

/// Runs [`greedy_subspace_search`] over a deterministic stream of starting pairs — the
/// all-one vector paired with each basis codeword first (unital starts carry
/// a better lower bound), then basis pairs in index order — and returns the
/// largest output, ties to the earliest run.
pub fn search_all_starts(
    c: &SelfDualCode,
    budget: usize,
    policy: Policy,
    limit: u64,
) -> Result<SearchState> {
    if budget == 0 {
        return Err(Error::Parameter("budget must be at least 1".into()));
    }
    let ones = BitVec::ones(c.length());
    let basis = c.code().basis().rows();
    let mut starts: Vec<(BitVec, BitVec)> = Vec::new();
    for row in basis {
        if *row != ones {
            starts.push((ones.clone(), row.clone()));
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            starts.push((basis[i].clone(), basis[j].clone()));
        }
    }
    let mut best: Option<SearchState> = None;
    for (y, z) in starts.into_iter().take(budget) {
        let state = greedy_subspace_search(c, &y, &z, policy, limit)?;
        if best.as_ref().is_none_or(|b| state.size() > b.size()) {
            best = Some(state);
        }
    }
    Ok(best.expect("at least one start pair exists for dim >= 2"))
}

/// Lower bound on the output size of the greedy search over a `[2k, k]`
/// self-dual code: the smallest `h` with `C(h+1, 2) ≥ k`, improving to the
/// smallest `h` with `C(h, 2) + 1 ≥ k` when the all-one vector is a starting
/// codeword.
pub fn bound_lower(k: usize, unital: bool) -> usize {
    let mut h = 1usize;
    loop {
        let enough = if unital {
            h * (h - 1) / 2 + 1 >= k
        } else {
            h * (h + 1) / 2 >= k
        };
        if enough {
            return h;
        }
        h += 1;
    }
}

/// Smallest self-dual dimension `k` guaranteeing a triorthogonal subspace of
/// dimension `r ≥ 3`: `C(r, 2) + 1` in general, `C(r-1, 2) + 2` when the
/// all-one vector is a starting codeword.
pub fn min_k_for_dimension(r: usize, unital: bool) -> Result<usize> {
    if r < 3 {
        return Err(Error::Parameter(format!("r must be at least 3, got {r}")));
    }
    Ok(if unital {
        (r - 1) * (r - 2) / 2 + 2
    } else {
        r * (r - 1) / 2 + 1
    })
}

/// Exhaustively enumerates every self-dual code of the given (even, small)
/// length by growing self-orthogonal independent sets in increasing vector
/// order, deduplicated by canonical basis. Intended for lengths up to 8.
pub fn all_selfdual_codes(len: usize) -> Result<Vec<LinearCode>> {
    if len % 2 != 0 || len == 0 || len > 12 {
        return Err(Error::Parameter(format!(
            "exhaustive enumeration wants a small even length, got {len}"
        )));
    }
    let k = len / 2;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<BitVec> = Vec::new();

    fn vec_of(bits: u32, len: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            if bits >> i & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    fn dfs(
        len: usize,
        k: usize,
        start: u32,
        stack: &mut Vec<BitVec>,
        seen: &mut std::collections::HashSet<Vec<BitVec>>,
        out: &mut Vec<LinearCode>,
    ) {
        if stack.len() == k {
            let code = LinearCode::from_span(
                &BitMatrix::from_rows(stack.clone()).expect("rows share length"),
            );
            if seen.insert(code.basis().rows().to_vec()) {
                out.push(code);
            }
            return;
        }
        for bits in start..1u32 << len {
            let v = vec_of(bits, len);
            if v.weight() % 2 != 0 {
                continue;
            }
            if stack.iter().any(|b| b.parity_and(&v)) {
                continue;
            }
            let mut m = BitMatrix::from_rows(stack.clone())
                .unwrap_or_else(|_| BitMatrix::empty(len));
            m.push_row(v.clone()).expect("same length");
            if m.rank() != stack.len() + 1 {
                continue;
            }
            stack.push(v);
            dfs(len, k, bits + 1, stack, seen, out);
            stack.pop();
        }
    }

    dfs(len, k, 1, &mut stack, &mut seen, &mut out);
    Ok(out)
}
