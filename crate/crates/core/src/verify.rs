//! The reproduction suite: every shipped claim re-checked from scratch.
//!
//! Each check returns a pass/fail line; the same functions back the
//! `reproduce` command and the acceptance test target. Fixtures normally
//! come from the embedded copies but can be overridden with a directory, in
//! which case missing or perturbed files show up as explicit failures.

use crate::constructions::{
    block_diag, building_up, concat_columns, extend, matching_matrix, pad_with_selfdual,
    plotkin_variants, row_pair_sum, shorten,
};
use crate::fixtures;
use crate::gf2::{BitMatrix, BitVec, LinearCode};
use crate::params::exact_dz;
use crate::random::{random_selfdual_code, random_trimatrix};
use crate::recipe;
use crate::selfdual::{
    greedy_subspace_search, all_selfdual_codes, bound_lower, classify_selfdual_triortho, min_k_for_dimension,
    Policy, SelfDualCode,
};
use crate::table::{table2_pipeline, DiffStatus, Table2Options, VerifyOutcome};
use crate::triortho::{check_trimatrix, check_trispace, TriMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Where fixture matrices come from: the embedded copies, or a directory of
/// `.mat` files overriding them.
#[derive(Debug, Clone, Default)]
pub struct FixtureSource {
    pub dir: Option<PathBuf>,
}

impl FixtureSource {
    pub fn embedded() -> Self {
        Self { dir: None }
    }

    pub fn from_dir(dir: PathBuf) -> Self {
        Self { dir: Some(dir) }
    }

    fn matrix_text(&self, name: &str) -> Result<String, String> {
        match &self.dir {
            None => fixtures::embedded_matrix(name)
                .map(str::to_string)
                .ok_or_else(|| format!("unknown fixture {name}")),
            Some(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path)
                    .map_err(|e| format!("missing fixture file {}: {e}", path.display()))
            }
        }
    }

    fn matrix(&self, name: &str) -> Result<BitMatrix, String> {
        let text = self.matrix_text(name)?;
        crate::io::parse_matrix(&text).map_err(|e| format!("fixture {name}: {e}"))
    }

    fn trimatrix(&self, name: &str) -> Result<TriMatrix, String> {
        TriMatrix::partition_rows(self.matrix(name)?).map_err(|e| format!("fixture {name}: {e}"))
    }
}

pub struct VerifyOptions {
    pub fixtures: FixtureSource,
    pub limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            fixtures: FixtureSource::embedded(),
            limit: 1 << 26,
        }
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckResult> {
    vec![
        check_reference_params(opts),
        check_pipeline(opts),
        check_dsum_rule(opts),
        check_pad_rule(opts),
        check_min_k_table(),
        check_search_fixture(opts),
        check_selfdual_characterization(),
        check_search_bounds(opts),
        check_dz_table(opts),
        check_closure(opts),
    ]
}

/// Exact parameters of the two reference matrices.
pub fn check_reference_params(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "reference-params";
    let cases = [("tri14.mat", (14, 2, 2)), ("tri15_ext.mat", (15, 1, 3))];
    for (file, (n, k, d)) in cases {
        let g = match opts.fixtures.trimatrix(file) {
            Ok(g) => g,
            Err(e) => return CheckResult::fail(NAME, e),
        };
        if (g.n(), g.k()) != (n, k) {
            return CheckResult::fail(
                NAME,
                format!("{file}: got [[{},{}]], want [[{n},{k}]]", g.n(), g.k()),
            );
        }
        match exact_dz(&g, opts.limit) {
            Ok(dz) if dz == d => {}
            Ok(dz) => {
                return CheckResult::fail(NAME, format!("{file}: d_Z = {dz}, want {d}"))
            }
            Err(e) => return CheckResult::fail(NAME, format!("{file}: {e}")),
        }
    }
    CheckResult::pass(NAME, "[[14,2,2]] and [[15,1,3]] confirmed exactly")
}

/// The 16-column walkthrough: reduce, strip two pivot columns, combine, with
/// every parameter confirmed by the exact oracle.
pub fn check_pipeline(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "walkthrough-pipeline";
    let tri16 = match opts.fixtures.matrix("tri16.mat") {
        Ok(m) => m,
        Err(e) => return CheckResult::fail(NAME, e),
    };
    let dir = std::env::temp_dir().join(format!("trio-verify-{}", std::process::id()));
    if let Err(e) = std::fs::create_dir_all(&dir) {
        return CheckResult::fail(NAME, format!("temp dir: {e}"));
    }
    let result = (|| -> Result<String, String> {
        std::fs::write(dir.join("tri16.mat"), crate::io::write_matrix(&tri16))
            .map_err(|e| e.to_string())?;
        let script = recipe::parse_recipe(fixtures::PIPELINE_RECIPE).map_err(|e| e.to_string())?;
        let reports =
            recipe::run_recipe(&script, &dir, None, opts.limit).map_err(|e| e.to_string())?;
        let lookup = |id: &str| -> Result<&recipe::NodeReport, String> {
            reports
                .iter()
                .find(|r| r.id == id)
                .ok_or_else(|| format!("missing node {id}"))
        };
        for (id, n, k, d) in [
            ("g2", 15usize, 1usize, 3usize),
            ("g3", 14, 2, 2),
            ("g4", 29, 3, 2),
            ("g5", 30, 2, 3),
        ] {
            let r = lookup(id)?;
            if r.ncols != n || r.k != Some(k) || r.dz != recipe::DzNote::Exact(d) {
                return Err(format!(
                    "node {id}: got {} want [[{n},{k},{d}]]",
                    r.summary()
                ));
            }
        }
        Ok("reduce/strip/strip/dsum chain gives [[15,1,3]], [[14,2,2]], [[29,3,2]], [[30,2,3]]"
            .to_string())
    })();
    std::fs::remove_dir_all(&dir).ok();
    match result {
        Ok(detail) => CheckResult::pass(NAME, detail),
        Err(e) => CheckResult::fail(NAME, e),
    }
}

fn random_pool(seed: u64, count: usize, half_len_max: usize) -> Vec<TriMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = Vec::with_capacity(count);
    while pool.len() < count {
        let half = rng.gen_range(3..=half_len_max);
        match random_trimatrix(&mut rng, half, 2) {
            Ok(t) => pool.push(t),
            Err(_) => continue,
        }
    }
    pool
}

/// Exact distance of a block-diagonal sum equals the minimum of the exact
/// component distances, over randomized pairs.
pub fn check_dsum_rule(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "dsum-distance-rule";
    let pool = random_pool(0xA5, 20, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(0xA6);
    for trial in 0..50 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let summed = match TriMatrix::partition_rows(block_diag(a.matrix(), b.matrix())) {
            Ok(t) => t,
            Err(e) => return CheckResult::fail(NAME, format!("trial {trial}: {e}")),
        };
        let (da, db, ds) = match (
            exact_dz(a, opts.limit),
            exact_dz(b, opts.limit),
            exact_dz(&summed, opts.limit),
        ) {
            (Ok(x), Ok(y), Ok(z)) => (x, y, z),
            other => return CheckResult::fail(NAME, format!("trial {trial}: {other:?}")),
        };
        if ds != da.min(db) {
            return CheckResult::fail(
                NAME,
                format!("trial {trial}: d(sum) = {ds}, components {da}, {db}"),
            );
        }
    }
    CheckResult::pass(NAME, "50 randomized pairs: exact distance equals min of components")
}

/// Padding with `[I_t|I_t]` never moves the exact distance.
pub fn check_pad_rule(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "pad-distance-rule";
    let a = match opts.fixtures.trimatrix("tri15.mat") {
        Ok(g) => g,
        Err(e) => return CheckResult::fail(NAME, e),
    };
    let padded = match pad_with_selfdual(&a, 3) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    match exact_dz(&padded, opts.limit) {
        Ok(3) => {}
        other => {
            return CheckResult::fail(
                NAME,
                format!("reference pad by [I_3|I_3]: {other:?}, want Ok(3)"),
            )
        }
    }
    let pool = random_pool(0xB7, 10, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(0xB8);
    for trial in 0..20 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let t = rng.gen_range(1..=3);
        let da = exact_dz(a, opts.limit);
        let dp = pad_with_selfdual(a, t).and_then(|p| exact_dz(&p, opts.limit));
        match (da, dp) {
            (Ok(x), Ok(y)) if x == y => {}
            other => {
                return CheckResult::fail(NAME, format!("trial {trial} (t={t}): {other:?}"))
            }
        }
    }
    CheckResult::pass(NAME, "distance invariant under padding on fixture and 20 random cases")
}

/// The 16-cell minimum-dimension table.
pub fn check_min_k_table() -> CheckResult {
    const NAME: &str = "min-k-table";
    let expected = [
        (3, 4, 3),
        (4, 7, 5),
        (5, 11, 8),
        (6, 16, 12),
        (7, 22, 17),
        (8, 29, 23),
        (9, 37, 30),
        (10, 46, 38),
    ];
    for (r, general, unital) in expected {
        let g = min_k_for_dimension(r, false);
        let u = min_k_for_dimension(r, true);
        if g != Ok(general) || u != Ok(unital) {
            return CheckResult::fail(
                NAME,
                format!("r={r}: got ({g:?}, {u:?}), want ({general}, {unital})"),
            );
        }
    }
    CheckResult::pass(NAME, "all 16 cells reproduced exactly")
}

/// The documented greedy run on the 10-column self-dual code.
pub fn check_search_fixture(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "search-fixture";
    let gen = match opts.fixtures.matrix("selfdual10.mat") {
        Ok(m) => m,
        Err(e) => return CheckResult::fail(NAME, e),
    };
    let code = match SelfDualCode::new(gen) {
        Ok(c) => c,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    let ones = BitVec::ones(10);
    let start = code.generator().row(0).clone();
    let out = match greedy_subspace_search(&code, &ones, &start, Policy::default(), opts.limit) {
        Ok(o) => o,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    let expected_member = BitVec::from_str01("0000010100").expect("literal");
    if out.size() != 4 {
        return CheckResult::fail(NAME, format!("|H| = {}, want 4", out.size()));
    }
    if !out.contains(&ones) || !out.contains(&expected_member) {
        return CheckResult::fail(NAME, "expected members missing from H".to_string());
    }
    if !check_trispace(out.span()) {
        return CheckResult::fail(NAME, "span of H is not a triorthogonal space".to_string());
    }
    let k = code.dim();
    let lower = bound_lower(k, false);
    if !(lower <= out.size() && out.size() <= k) {
        return CheckResult::fail(
            NAME,
            format!("bound sandwich violated: {lower} <= {} <= {k}", out.size()),
        );
    }
    if lower != 3 {
        return CheckResult::fail(NAME, format!("general lower bound for k=5 is {lower}, want 3"));
    }
    // Every policy must reach at least the unital guarantee.
    for policy in [Policy::MinWeight, Policy::Seeded(1), Policy::Seeded(99)] {
        match greedy_subspace_search(&code, &ones, &start, policy, opts.limit) {
            Ok(o) if o.size() >= 4 => {}
            Ok(o) => {
                return CheckResult::fail(
                    NAME,
                    format!("{policy:?}: |H| = {} < 4", o.size()),
                )
            }
            Err(e) => return CheckResult::fail(NAME, format!("{policy:?}: {e}")),
        }
    }
    CheckResult::pass(NAME, "|H| = 4 with both quoted members; 3 <= 4 <= 5; all policies reach 4")
}

/// Exhaustive agreement of the three triorthogonality criteria over all
/// self-dual codes of length up to 8.
pub fn check_selfdual_characterization() -> CheckResult {
    const NAME: &str = "selfdual-characterization";
    let expected_counts = [(2usize, 1usize, 1usize), (4, 3, 3), (6, 15, 15), (8, 135, 105)];
    for (len, total, positives) in expected_counts {
        let codes = match all_selfdual_codes(len) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(NAME, e.to_string()),
        };
        if codes.len() != total {
            return CheckResult::fail(
                NAME,
                format!("length {len}: {} codes enumerated, want {total}", codes.len()),
            );
        }
        let mut found_positive = 0;
        for code in codes {
            let sd = match SelfDualCode::new(code.basis().clone()) {
                Ok(c) => c,
                Err(e) => return CheckResult::fail(NAME, e.to_string()),
            };
            let tri = check_trispace(sd.code());
            let closed = sd.wedge_closed();
            let verdict = classify_selfdual_triortho(&sd);
            let witness = verdict.witness.is_some();
            if tri != closed || tri != witness {
                return CheckResult::fail(
                    NAME,
                    format!("length {len}: criteria disagree (tri={tri}, closed={closed}, witness={witness})"),
                );
            }
            if let Some(perm) = verdict.witness {
                let permuted = sd.code().basis().select_columns(&perm);
                if LinearCode::from_span(&permuted)
                    != LinearCode::from_span(&matching_matrix(len / 2))
                {
                    return CheckResult::fail(
                        NAME,
                        format!("length {len}: witness permutation does not give the matching code"),
                    );
                }
                found_positive += 1;
            }
        }
        if found_positive != positives {
            return CheckResult::fail(
                NAME,
                format!("length {len}: {found_positive} positives, want {positives}"),
            );
        }
    }
    CheckResult::pass(
        NAME,
        "154 codes of length <= 8: triple test, wedge closure, and matching witness agree",
    )
}

/// Bound sandwich and solvability guarantees on randomized self-dual codes.
pub fn check_search_bounds(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "search-bounds";
    let mut rng = ChaCha8Rng::seed_from_u64(0xC9);
    for trial in 0..200 {
        let half = rng.gen_range(5..=12);
        let moves = rng.gen_range(3..10);
        let code = match random_selfdual_code(&mut rng, 2 * half, moves) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(NAME, format!("trial {trial}: {e}")),
        };
        let k = code.dim();
        let ones = BitVec::ones(code.length());
        let basis = code.code().basis().rows().to_vec();
        let unital_run = rng.gen::<bool>();
        let (y, z) = if unital_run {
            let other = basis.iter().find(|r| **r != ones).expect("k >= 5");
            (ones.clone(), other.clone())
        } else {
            (basis[0].clone(), basis[1].clone())
        };
        let out = match greedy_subspace_search(&code, &y, &z, Policy::FirstFound, opts.limit) {
            Ok(o) => o,
            Err(e) => return CheckResult::fail(NAME, format!("trial {trial}: {e}")),
        };
        let h = out.size();
        if !check_trispace(out.span()) {
            return CheckResult::fail(NAME, format!("trial {trial}: span not triorthogonal"));
        }
        if h > k {
            return CheckResult::fail(NAME, format!("trial {trial}: |H| = {h} > k = {k}"));
        }
        // Termination is only allowed once the solvability guarantee is
        // exhausted.
        if k > h * (h + 1) / 2 {
            return CheckResult::fail(
                NAME,
                format!("trial {trial}: halted at |H| = {h} although k = {k} forces progress"),
            );
        }
        let starts_unital = y == ones || z == ones;
        if starts_unital && k > h * (h - 1) / 2 + 1 {
            return CheckResult::fail(
                NAME,
                format!("trial {trial}: unital run halted early (|H| = {h}, k = {k})"),
            );
        }
        let lower = bound_lower(k, starts_unital);
        if h < lower {
            return CheckResult::fail(
                NAME,
                format!("trial {trial}: |H| = {h} below lower bound {lower}"),
            );
        }
    }
    CheckResult::pass(NAME, "200 randomized runs satisfy the sandwich and never halt early")
}

/// The derived distance table: quoted cells reproduced, verified entries
/// exact, unreachable cells honestly labeled.
pub fn check_dz_table(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "dz-table";
    let report = match table2_pipeline(&Table2Options {
        limit: opts.limit,
        ..Table2Options::default()
    }) {
        Ok(r) => r,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    for (n, k, d) in [
        (30, 2, 3),
        (38, 2, 3),
        (40, 2, 3),
        (41, 3, 2),
        (44, 2, 3),
        (45, 3, 3),
        (60, 4, 3),
    ] {
        match report.entry(n, k) {
            Some(e) if e.dz == d => {}
            other => {
                return CheckResult::fail(
                    NAME,
                    format!("cell ({n},{k}): got {other:?}, want d_Z = {d}"),
                )
            }
        }
    }
    if let Some(bad) = report
        .entries
        .iter()
        .find(|e| matches!(e.verified, VerifyOutcome::Mismatch { .. }))
    {
        return CheckResult::fail(
            NAME,
            format!("entry ({},{}) disagrees with the exact oracle", bad.n, bad.k),
        );
    }
    if report.diffs.iter().any(|d| d.status == DiffStatus::Mismatch) {
        return CheckResult::fail(NAME, "pipeline claims to beat the reference table");
    }
    let unreproducible = report
        .diffs
        .iter()
        .filter(|d| d.status == DiffStatus::Unreproducible)
        .count();
    let verified = report
        .entries
        .iter()
        .filter(|e| e.verified == VerifyOutcome::Verified)
        .count();
    CheckResult::pass(
        NAME,
        format!(
            "7 quoted cells reproduced; {verified} entries exactly verified; {unreproducible} cells need external seeds"
        ),
    )
}

/// Closure property: randomized applications of every construction yield
/// matrices passing the exhaustive triorthogonality check.
pub fn check_closure(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "construction-closure";
    let mut pool = random_pool(0xD1, 10, 5);
    if let Ok(t) = opts.fixtures.trimatrix("tri14.mat") {
        pool.push(t);
    }
    if let Ok(t) = opts.fixtures.trimatrix("tri15.mat") {
        pool.push(t);
    }
    pool.push(TriMatrix::partition_rows(matching_matrix(3)).expect("matching is triorthogonal"));
    let mut rng = ChaCha8Rng::seed_from_u64(0xD2);
    for trial in 0..1000 {
        let g = &pool[rng.gen_range(0..pool.len())];
        let op = trial % 7;
        let produced: Result<Vec<BitMatrix>, crate::error::Error> = match op {
            0 => shorten(g, rng.gen_range(0..g.n())).map(|s| vec![s.matrix]),
            1 => extend(g, rng.gen_range(0..g.num_rows())).map(|t| vec![t.into_matrix()]),
            2 => {
                let other = &pool[rng.gen_range(0..pool.len())];
                Ok(vec![block_diag(g.matrix(), other.matrix())])
            }
            3 => concat_columns(g.matrix(), g.matrix()).map(|m| vec![m]),
            4 => {
                let p = plotkin_variants(g);
                Ok(vec![p.prime, p.double_prime])
            }
            5 => {
                let m = g.num_rows();
                if m < 2 {
                    Ok(vec![])
                } else {
                    let r = rng.gen_range(1..=m / 2);
                    let mut idx: Vec<usize> = (0..m).collect();
                    for i in (1..m).rev() {
                        idx.swap(i, rng.gen_range(0..=i));
                    }
                    row_pair_sum(g.matrix(), &idx[..r], &idx[r..2 * r]).map(|m| vec![m])
                }
            }
            _ => {
                let mut x = BitVec::zeros(g.n());
                for i in 0..g.n() {
                    if rng.gen::<bool>() {
                        x.set(i, true);
                    }
                }
                building_up(g.matrix(), &x).map(|m| vec![m])
            }
        };
        match produced {
            Ok(outputs) => {
                for m in outputs {
                    let report = check_trimatrix(&m);
                    if !report.is_ok() {
                        return CheckResult::fail(
                            NAME,
                            format!(
                                "trial {trial} (op {op}): output violates {:?}",
                                report.first_violation
                            ),
                        );
                    }
                }
            }
            Err(e) => return CheckResult::fail(NAME, format!("trial {trial} (op {op}): {e}")),
        }
    }
    CheckResult::pass(NAME, "1000 randomized applications closed under triorthogonality")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_checks_pass_on_embedded_fixtures() {
        let opts = VerifyOptions::default();
        for check in [
            check_reference_params(&opts),
            check_pipeline(&opts),
            check_min_k_table(),
            check_search_fixture(&opts),
        ] {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn missing_fixture_dir_reports_missing_files() {
        let opts = VerifyOptions {
            fixtures: FixtureSource::from_dir(PathBuf::from("/nonexistent-fixture-dir")),
            limit: 1 << 26,
        };
        let r = check_reference_params(&opts);
        assert!(!r.passed);
        assert!(r.detail.contains("missing fixture file"));
    }
}
