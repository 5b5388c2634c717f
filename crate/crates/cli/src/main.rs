//! `trio` — build, transform, search, and measure triorthogonal matrices.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use trio_core::constructions;
use trio_core::error::Error;
use trio_core::gf2::{BitMatrix, BitVec, LinearCode};
use trio_core::io;
use trio_core::params::{exact_dz, g0_dual_dim, CodeParams};
use trio_core::recipe;
use trio_core::selfdual::{
    greedy_subspace_search, search_all_starts, bound_lower, classify_selfdual_triortho, is_selfdual,
    Policy, SearchState, SelfDualCode,
};
use trio_core::table::{table2_pipeline, DiffStatus, Table2Options, VerifyOutcome};
use trio_core::triortho::{check_trimatrix, TriMatrix};
use trio_core::verify::{run_all, FixtureSource, VerifyOptions};

const EXIT_OK: i32 = 0;
const EXIT_VALIDATION: i32 = 1;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "trio",
    version,
    about = "Triorthogonal matrices: constructions, searches, and exact [[n,k,d_Z]] parameters"
)]
struct Cli {
    /// Exhaustive-enumeration budget, either a count or a power like 2^26.
    #[arg(long, global = true, default_value = "2^26", value_parser = parse_limit)]
    limit: u64,

    /// Seed for the `seeded` selection policy.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Candidate selection policy for searches: first, minweight, or
    /// seeded[:N].
    #[arg(long, global = true, default_value = "first")]
    policy: String,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// All-even doubling `[G1 G1; O G0]`.
    Prime,
    /// Odd-preserving doubling `[O G1; G0 G0]`.
    Double,
}

#[derive(Subcommand)]
enum Command {
    /// Check triorthogonality; prints PASS/FAIL and the first violation.
    Check { file: PathBuf },
    /// Keep the rows with a 0 at the column and delete that column.
    Shorten {
        file: PathBuf,
        /// Column index (0-based).
        #[arg(short = 'i', long)]
        index: usize,
        #[command(flatten)]
        emit: Emit,
    },
    /// Add an indicator column for one row (prepended unless --append).
    Extend {
        file: PathBuf,
        /// Row index (0-based).
        #[arg(short = 'r', long)]
        row: usize,
        /// Place the new column last instead of first.
        #[arg(long)]
        append: bool,
        #[command(flatten)]
        emit: Emit,
    },
    /// Block-diagonal sum of two matrices.
    Dsum {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        emit: Emit,
    },
    /// One of the two doubling constructions.
    Plotkin {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Double)]
        variant: Variant,
        #[command(flatten)]
        emit: Emit,
    },
    /// Building-up: one extra row and 2m extra columns driven by a vector.
    Buildup {
        file: PathBuf,
        /// The driving vector as a 0/1 string of length ncols.
        #[arg(short = 'x', long)]
        x: String,
        #[command(flatten)]
        emit: Emit,
    },
    /// Pad with the self-dual block [I_t | I_t].
    Pad {
        file: PathBuf,
        #[arg(short = 't', long)]
        t: usize,
        #[command(flatten)]
        emit: Emit,
    },
    /// Exact parameters [[n, k, d_Z]] and gamma.
    Params { file: PathBuf },
    /// Greedy triorthogonal-subspace search in a self-dual code.
    Search {
        file: PathBuf,
        /// Starting pair as two comma-separated 0/1 strings.
        #[arg(long, conflicts_with = "all")]
        start: Option<String>,
        /// Try a stream of starting pairs and keep the best result.
        #[arg(long)]
        all: bool,
        /// Maximum number of runs with --all.
        #[arg(long, default_value_t = 16)]
        budget: usize,
        /// Write the output set as a matrix file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Self-dual? Triorthogonal space? Permutation witness?
    Classify { file: PathBuf },
    /// Close the shipped seeds under dsum/pad and diff against the
    /// reference distance table.
    Table2 {
        #[arg(long, default_value_t = 66)]
        max_n: usize,
    },
    /// Run a construction script.
    Recipe {
        file: PathBuf,
        /// Directory for the per-node matrix files.
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
    /// Re-run every shipped claim and print one verdict per check.
    Reproduce {
        /// Read fixture matrices from this directory instead of the
        /// embedded copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Matrix-emitting options shared by the construction commands.
#[derive(clap::Args)]
struct Emit {
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also print [[n, k, d_Z]] of the result.
    #[arg(long)]
    params: bool,
}

fn parse_limit(s: &str) -> Result<u64, String> {
    if let Some(exp) = s.strip_prefix("2^") {
        let exp: u32 = exp.parse().map_err(|_| format!("bad exponent {exp:?}"))?;
        if exp >= 63 {
            return Err("limit exponent must be below 63".into());
        }
        return Ok(1u64 << exp);
    }
    s.parse().map_err(|_| format!("bad limit {s:?}"))
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { upper_bound, .. } => {
                    if let Some(ub) = upper_bound {
                        eprintln!("note: sampled non-exact upper bound {ub}");
                    }
                    EXIT_BUDGET
                }
                _ => EXIT_VALIDATION,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Shorten { file, index, emit } => {
            let g = load_tri(file)?;
            let s = constructions::shorten(&g, *index)?;
            if !s.parameter_rule_applies() {
                eprintln!(
                    "warning: surviving rows are all {} weight; the [[n-1,k']] rule needs both classes",
                    if s.odd_count == 0 { "even" } else { "odd" }
                );
            }
            emit_matrix(&s.matrix, emit, cli.limit)
        }
        Command::Extend {
            file,
            row,
            append,
            emit,
        } => {
            let g = load_tri(file)?;
            let e = constructions::extend_at(&g, *row, *append)?;
            emit_matrix(e.matrix(), emit, cli.limit)
        }
        Command::Dsum { a, b, emit } => {
            let (ma, mb) = (io::read_matrix_file(a)?, io::read_matrix_file(b)?);
            emit_matrix(&constructions::block_diag(&ma, &mb), emit, cli.limit)
        }
        Command::Plotkin {
            file,
            variant,
            emit,
        } => {
            let g = load_tri(file)?;
            let pair = constructions::plotkin_variants(&g);
            let m = match variant {
                Variant::Prime => pair.prime,
                Variant::Double => pair.double_prime,
            };
            emit_matrix(&m, emit, cli.limit)
        }
        Command::Buildup { file, x, emit } => {
            let m = io::read_matrix_file(file)?;
            let x = BitVec::from_str01(x)?;
            emit_matrix(&constructions::building_up(&m, &x)?, emit, cli.limit)
        }
        Command::Pad { file, t, emit } => {
            let g = load_tri(file)?;
            let padded = constructions::pad_with_selfdual(&g, *t)?;
            emit_matrix(padded.matrix(), emit, cli.limit)
        }
        Command::Params { file } => cmd_params(file, cli.limit, cli.format),
        Command::Search {
            file,
            start,
            all,
            budget,
            out,
        } => cmd_search(
            file,
            start.as_deref(),
            *all,
            *budget,
            &cli.policy,
            cli.seed,
            out.as_deref(),
            cli.limit,
        ),
        Command::Classify { file } => cmd_classify(file),
        Command::Table2 { max_n } => cmd_table2(*max_n, cli.limit, cli.format),
        Command::Recipe { file, outdir } => cmd_recipe(file, outdir.as_deref(), cli.limit),
        Command::Reproduce { fixtures } => cmd_reproduce(fixtures.clone(), cli.limit, cli.format),
    }
}

fn load_tri(path: &Path) -> Result<TriMatrix, Error> {
    TriMatrix::partition_rows(io::read_matrix_file(path)?)
}

fn params_line(m: &BitMatrix, limit: u64) -> String {
    let report = check_trimatrix(m);
    if !report.is_ok() {
        return format!("not triorthogonal: {}", report.first_violation.unwrap());
    }
    if m.rank() != m.nrows() {
        return "rank-deficient: parameters not applicable".into();
    }
    let g = TriMatrix::partition_rows(m.clone()).expect("validated");
    if g.k() == 0 {
        return format!("[[{},0,-]] (no odd rows)", g.n());
    }
    match exact_dz(&g, limit) {
        Ok(d) => {
            let p = CodeParams::exact(g.n(), g.k(), d);
            match p.gamma() {
                Ok(gamma) => format!("{p} gamma={gamma:.6}"),
                Err(_) => format!("{p}"),
            }
        }
        Err(Error::BudgetExceeded {
            needed_log2,
            upper_bound,
            ..
        }) => {
            let mut s = format!(
                "[[{},{},?]] (d_Z needs 2^{needed_log2} enumeration; raise --limit",
                g.n(),
                g.k()
            );
            if let Some(ub) = upper_bound {
                s.push_str(&format!("; sampled non-exact upper bound {ub}"));
            }
            s.push(')');
            s
        }
        Err(e) => format!("d_Z failed: {e}"),
    }
}

fn emit_matrix(m: &BitMatrix, emit: &Emit, limit: u64) -> Result<i32, Error> {
    match &emit.out {
        Some(path) => io::write_matrix_file(path, m)?,
        None => print!("{}", io::write_matrix(m)),
    }
    if emit.params {
        println!("{}", params_line(m, limit));
    }
    Ok(EXIT_OK)
}

fn cmd_check(file: &Path) -> Result<i32, Error> {
    let m = io::read_matrix_file(file)?;
    let report = check_trimatrix(&m);
    let odd = m.rows().iter().filter(|r| r.weight() % 2 == 1).count();
    let even = m.nrows() - odd;
    if report.is_ok() {
        println!("PASS: triorthogonal");
        println!("rows = {} (odd {odd}, even {even}), cols = {}", m.nrows(), m.ncols());
        Ok(EXIT_OK)
    } else {
        println!("FAIL: {}", report.first_violation.expect("violation present"));
        println!("rows = {} (odd {odd}, even {even}), cols = {}", m.nrows(), m.ncols());
        Ok(EXIT_VALIDATION)
    }
}

fn cmd_params(file: &Path, limit: u64, format: Format) -> Result<i32, Error> {
    let g = load_tri(file)?;
    if g.k() == 0 {
        println!("[[{},0,-]] (no odd rows, d_Z undefined)", g.n());
        return Ok(EXIT_OK);
    }
    let d = exact_dz(&g, limit)?;
    let p = CodeParams::exact(g.n(), g.k(), d);
    let gamma = p.gamma().ok();
    match format {
        Format::Text => {
            println!("{p}");
            if let Some(gamma) = gamma {
                println!("gamma = {gamma:.6}");
            }
            println!("enumeration: 2^{}", g0_dual_dim(&g));
        }
        Format::Csv => {
            println!("n,k,dz,gamma");
            match gamma {
                Some(gamma) => println!("{},{},{d},{gamma:.6}", p.n, p.k),
                None => println!("{},{},{d},", p.n, p.k),
            }
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    file: &Path,
    start: Option<&str>,
    all: bool,
    budget: usize,
    policy: &str,
    seed: Option<u64>,
    out: Option<&Path>,
    limit: u64,
) -> Result<i32, Error> {
    let generator = io::read_matrix_file(file)?;
    let code = SelfDualCode::new(generator)?;
    let policy = resolve_policy(policy, seed)?;
    let state: SearchState = if all {
        search_all_starts(&code, budget, policy, limit)?
    } else {
        let (y, z) = match start {
            Some(pair) => {
                let (a, b) = pair.split_once(',').ok_or_else(|| {
                    Error::Parameter("start must be two comma-separated 0/1 strings".into())
                })?;
                (BitVec::from_str01(a)?, BitVec::from_str01(b)?)
            }
            None => {
                // Default start: the all-one vector with the first basis row
                // differing from it.
                let ones = BitVec::ones(code.length());
                let other = code
                    .code()
                    .basis()
                    .rows()
                    .iter()
                    .find(|r| **r != ones)
                    .ok_or_else(|| Error::Parameter("code has no second codeword".into()))?
                    .clone();
                (ones, other)
            }
        };
        greedy_subspace_search(&code, &y, &z, policy, limit)?
    };
    let k = code.dim();
    println!("code: [{}, {k}] self-dual", code.length());
    println!("|H| = {}", state.size());
    println!(
        "bounds: general {} <= |H| <= {k}, unital-start lower bound {}",
        bound_lower(k, false),
        bound_lower(k, true)
    );
    println!("H:");
    let matrix = state.as_matrix();
    print!("{}", io::write_matrix(&matrix));
    if let Some(path) = out {
        io::write_matrix_file(path, &matrix)?;
    }
    Ok(EXIT_OK)
}

fn resolve_policy(policy: &str, seed: Option<u64>) -> Result<Policy, Error> {
    if policy == "seeded" {
        let seed = seed.ok_or_else(|| {
            Error::Parameter("policy `seeded` needs --seed N or the seeded:N form".into())
        })?;
        return Ok(Policy::Seeded(seed));
    }
    policy.parse()
}

fn cmd_classify(file: &Path) -> Result<i32, Error> {
    let m = io::read_matrix_file(file)?;
    if !is_selfdual(&m) {
        println!("self-dual: no");
        let code = LinearCode::from_span(&m);
        println!(
            "triorthogonal space: {}",
            yesno(trio_core::triortho::check_trispace(&code))
        );
        println!("permutation witness: n/a (not self-dual)");
        return Ok(EXIT_OK);
    }
    println!("self-dual: yes");
    let code = SelfDualCode::new(m)?;
    let verdict = classify_selfdual_triortho(&code);
    println!("triorthogonal space: {}", yesno(verdict.is_trispace));
    match verdict.witness {
        Some(perm) => {
            let cols: Vec<String> = perm.iter().map(|c| c.to_string()).collect();
            println!("permutation witness: {}", cols.join(" "));
        }
        None => {
            println!("permutation witness: none");
            if let Some((i, j, w)) = code.wedge_closure_witness() {
                println!("wedge witness: basis rows ({i},{j}) give {w}, not in the code");
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table2(max_n: usize, limit: u64, format: Format) -> Result<i32, Error> {
    let report = table2_pipeline(&Table2Options {
        max_n,
        limit,
        ..Table2Options::default()
    })?;
    let verified = |e: &VerifyOutcome| match e {
        VerifyOutcome::Verified => "exact".to_string(),
        VerifyOutcome::Mismatch { got } => format!("MISMATCH({got})"),
        VerifyOutcome::Skipped { dual_dim } => format!("skipped(2^{dual_dim})"),
    };
    match format {
        Format::Text => {
            println!("derived entries (best d_Z per (n, k)):");
            for e in &report.entries {
                println!(
                    "  [[{},{},{}]]  {}  [{}]",
                    e.n,
                    e.k,
                    e.dz,
                    e.provenance(),
                    verified(&e.verified)
                );
            }
            println!("reference-table comparison:");
            for d in &report.diffs {
                let status = match d.status {
                    DiffStatus::Reproduced => "reproduced",
                    DiffStatus::Unreproducible => "needs external seeds",
                    DiffStatus::Mismatch => "MISMATCH (above reference)",
                };
                let found = d
                    .found
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "  n={} k={}: reference {}, derived {} -> {status}",
                    d.n, d.k, d.expected, found
                );
            }
        }
        Format::Csv => {
            println!("n,k,dz,provenance,verified");
            for e in &report.entries {
                println!(
                    "{},{},{},{},{}",
                    e.n,
                    e.k,
                    e.dz,
                    e.provenance(),
                    verified(&e.verified)
                );
            }
        }
    }
    let failed = report
        .diffs
        .iter()
        .any(|d| d.status == DiffStatus::Mismatch)
        || report
            .entries
            .iter()
            .any(|e| matches!(e.verified, VerifyOutcome::Mismatch { .. }));
    Ok(if failed { EXIT_VALIDATION } else { EXIT_OK })
}

fn cmd_recipe(file: &Path, outdir: Option<&Path>, limit: u64) -> Result<i32, Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Io {
        path: file.display().to_string(),
        msg: e.to_string(),
    })?;
    let script = recipe::parse_recipe(&text)?;
    let base = file.parent().unwrap_or_else(|| Path::new("."));
    let reports = recipe::run_recipe(&script, base, outdir, limit)?;
    for r in &reports {
        println!("{}", r.summary());
    }
    Ok(EXIT_OK)
}

fn cmd_reproduce(fixtures: Option<PathBuf>, limit: u64, format: Format) -> Result<i32, Error> {
    let opts = VerifyOptions {
        fixtures: match fixtures {
            Some(dir) => FixtureSource::from_dir(dir),
            None => FixtureSource::embedded(),
        },
        limit,
    };
    let results = run_all(&opts);
    let mut all_passed = true;
    for r in &results {
        all_passed &= r.passed;
        match format {
            Format::Text => println!(
                "{} {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            ),
            Format::Csv => println!(
                "{},{},{}",
                r.name,
                if r.passed { "pass" } else { "fail" },
                r.detail.replace(',', ";")
            ),
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_VALIDATION })
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
