//! Closure of the in-repo seed codes under direct sums and padding, and the
//! comparison against the shipped best-known `d_Z` table.
//!
//! Seeds are the `[[15,1,3]]` and `[[14,2,2]]` reference matrices; the
//! closure applies the two parameter rules (sum lengths and logical counts
//! with the minimum distance; pad by `[I_t|I_t]` keeping the distance) up to
//! the configured size limits, keeping the best distance per `(n, k)`.
//! Entries whose even-dual dimension fits the budget are re-verified against
//! the exact distance oracle. Table cells our seeds cannot reach are listed
//! as unreproducible rather than failed.

use crate::constructions::{block_diag, matching_matrix};
use crate::error::Result;
use crate::fixtures;
use crate::params::{exact_dz, g0_dual_dim};
use crate::triortho::TriMatrix;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy)]
pub struct Table2Options {
    pub max_n: usize,
    pub max_k: usize,
    /// Entries with even-dual dimension at most this are re-verified exactly.
    pub verify_dual_dim: usize,
    pub limit: u64,
}

impl Default for Table2Options {
    fn default() -> Self {
        Self {
            max_n: 66,
            max_k: 7,
            verify_dual_dim: 24,
            limit: 1 << 26,
        }
    }
}

/// One derived `(n, k) -> d_Z` entry with its provenance: `seeds_15` copies
/// of the `[[15,1,3]]` seed, `seeds_14` of the `[[14,2,2]]` seed, padded by
/// `[I_pad | I_pad]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table2Entry {
    pub n: usize,
    pub k: usize,
    pub dz: usize,
    pub seeds_15: usize,
    pub seeds_14: usize,
    pub pad: usize,
    pub verified: VerifyOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// The exact oracle agrees with the compositional value.
    Verified,
    /// The exact oracle disagrees — a rule violation, never expected.
    Mismatch { got: usize },
    /// Enumeration too large for the verification budget.
    Skipped { dual_dim: usize },
}

impl Table2Entry {
    pub fn provenance(&self) -> String {
        let mut parts = Vec::new();
        if self.seeds_15 > 0 {
            parts.push(format!("{}x[[15,1,3]]", self.seeds_15));
        }
        if self.seeds_14 > 0 {
            parts.push(format!("{}x[[14,2,2]]", self.seeds_14));
        }
        let mut s = parts.join(" + ");
        if self.pad > 0 {
            s.push_str(&format!(" + pad {}", self.pad));
        }
        s
    }

    /// Rebuilds the matrix this entry describes.
    pub fn materialize(&self) -> TriMatrix {
        let mut m = crate::gf2::BitMatrix::empty(0);
        for _ in 0..self.seeds_15 {
            m = block_diag(&m, fixtures::tri15().matrix());
        }
        for _ in 0..self.seeds_14 {
            m = block_diag(&m, fixtures::tri14b().matrix());
        }
        if self.pad > 0 {
            m = block_diag(&m, &matching_matrix(self.pad));
        }
        TriMatrix::partition_rows(m).expect("closure of triorthogonal blocks")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffStatus {
    /// The pipeline reaches the table value exactly.
    Reproduced,
    /// The table value needs seed codes we do not ship.
    Unreproducible,
    /// The pipeline exceeds the table value — never expected.
    Mismatch,
}

#[derive(Debug, Clone, Copy)]
pub struct DiffLine {
    pub n: usize,
    pub k: usize,
    pub expected: usize,
    pub found: Option<usize>,
    pub status: DiffStatus,
}

#[derive(Debug, Clone)]
pub struct Table2Report {
    pub entries: Vec<Table2Entry>,
    pub diffs: Vec<DiffLine>,
}

impl Table2Report {
    pub fn entry(&self, n: usize, k: usize) -> Option<&Table2Entry> {
        self.entries.iter().find(|e| e.n == n && e.k == k)
    }
}

pub fn table2_pipeline(opts: &Table2Options) -> Result<Table2Report> {
    #[derive(Clone, Copy, PartialEq, Eq)]
    struct Prov {
        dz: usize,
        a: usize,
        b: usize,
        t: usize,
    }
    // Better distance wins; ties prefer the lexicographically smallest
    // provenance so results are stable.
    fn better(old: &Prov, new: &Prov) -> bool {
        (new.dz, std::cmp::Reverse((new.a, new.b, new.t)))
            > (old.dz, std::cmp::Reverse((old.a, old.b, old.t)))
    }

    let mut best: HashMap<(usize, usize), Prov> = HashMap::new();
    let insert = |map: &mut HashMap<(usize, usize), Prov>, n: usize, k: usize, p: Prov| -> bool {
        match map.get(&(n, k)) {
            Some(old) if !better(old, &p) => false,
            _ => {
                map.insert((n, k), p);
                true
            }
        }
    };

    insert(&mut best, 15, 1, Prov { dz: 3, a: 1, b: 0, t: 0 });
    insert(&mut best, 14, 2, Prov { dz: 2, a: 0, b: 1, t: 0 });

    // Close under dsum and pad to a fixpoint.
    loop {
        let snapshot: Vec<((usize, usize), Prov)> =
            best.iter().map(|(k, v)| (*k, *v)).collect();
        let mut changed = false;
        for &((n1, k1), p1) in &snapshot {
            for &((n2, k2), p2) in &snapshot {
                let (n, k) = (n1 + n2, k1 + k2);
                if n > opts.max_n || k > opts.max_k {
                    continue;
                }
                let p = Prov {
                    dz: p1.dz.min(p2.dz),
                    a: p1.a + p2.a,
                    b: p1.b + p2.b,
                    t: p1.t + p2.t,
                };
                changed |= insert(&mut best, n, k, p);
            }
            if n1 + 2 <= opts.max_n {
                let p = Prov {
                    t: p1.t + 1,
                    ..p1
                };
                changed |= insert(&mut best, n1 + 2, k1, p);
            }
        }
        if !changed {
            break;
        }
    }

    let mut entries = Vec::with_capacity(best.len());
    let mut keys: Vec<_> = best.keys().copied().collect();
    keys.sort();
    for (n, k) in keys {
        let p = best[&(n, k)];
        let mut entry = Table2Entry {
            n,
            k,
            dz: p.dz,
            seeds_15: p.a,
            seeds_14: p.b,
            pad: p.t,
            verified: VerifyOutcome::Skipped { dual_dim: 0 },
        };
        let matrix = entry.materialize();
        debug_assert_eq!((matrix.n(), matrix.k()), (n, k));
        let dual_dim = g0_dual_dim(&matrix);
        entry.verified = if dual_dim <= opts.verify_dual_dim {
            let got = exact_dz(&matrix, opts.limit)?;
            if got == p.dz {
                VerifyOutcome::Verified
            } else {
                VerifyOutcome::Mismatch { got }
            }
        } else {
            VerifyOutcome::Skipped { dual_dim }
        };
        entries.push(entry);
    }

    let diffs = fixtures::best_dz_table()
        .into_iter()
        .filter(|&(n, k, _)| n <= opts.max_n && k <= opts.max_k)
        .map(|(n, k, expected)| {
            let found = best.get(&(n, k)).map(|p| p.dz);
            let status = match found {
                Some(d) if d == expected => DiffStatus::Reproduced,
                Some(d) if d > expected => DiffStatus::Mismatch,
                _ => DiffStatus::Unreproducible,
            };
            DiffLine {
                n,
                k,
                expected,
                found,
                status,
            }
        })
        .collect();

    Ok(Table2Report { entries, diffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_reaches_the_quoted_cells() {
        let report = table2_pipeline(&Table2Options::default()).unwrap();
        for (n, k, d) in [
            (30, 2, 3),
            (38, 2, 3),
            (40, 2, 3),
            (41, 3, 2),
            (44, 2, 3),
            (45, 3, 3),
            (60, 4, 3),
        ] {
            let e = report.entry(n, k).unwrap_or_else(|| panic!("missing ({n},{k})"));
            assert_eq!(e.dz, d, "cell ({n},{k})");
        }
    }

    #[test]
    fn no_entry_beats_the_reference_table() {
        let report = table2_pipeline(&Table2Options::default()).unwrap();
        assert!(report
            .diffs
            .iter()
            .all(|d| d.status != DiffStatus::Mismatch));
    }

    #[test]
    fn verified_entries_agree_with_the_exact_oracle() {
        let report = table2_pipeline(&Table2Options::default()).unwrap();
        let verified = report
            .entries
            .iter()
            .filter(|e| e.verified == VerifyOutcome::Verified)
            .count();
        assert!(verified >= 5, "expected several exactly-verified entries");
        assert!(report
            .entries
            .iter()
            .all(|e| !matches!(e.verified, VerifyOutcome::Mismatch { .. })));
    }

    #[test]
    fn known_unreachable_cells_are_unreproducible_not_failed() {
        let report = table2_pipeline(&Table2Options::default()).unwrap();
        for (n, k) in [(38, 6), (43, 3), (39, 7)] {
            let diff = report
                .diffs
                .iter()
                .find(|d| d.n == n && d.k == k)
                .unwrap();
            assert_eq!(diff.status, DiffStatus::Unreproducible, "cell ({n},{k})");
        }
    }
}
