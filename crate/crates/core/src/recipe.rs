//! Declarative construction pipelines.
//!
//! A recipe is a line-oriented script: `load <id> = <file>` brings a matrix
//! in, `node <id> = <op> <args…>` applies one construction to earlier nodes.
//! Scripts are acyclic by construction since every reference must name an
//! id defined on an earlier line.
//!
//! ```text
//! # comments and blank lines are skipped
//! load g16 = tri16.mat
//! node g1 = rowreduce g16
//! node g2 = delcol g1 0
//! node g4 = dsum g2 g2
//! ```

use crate::constructions;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::io;
use crate::params::{exact_dz, DzValue};
use crate::triortho::{check_trimatrix, TriMatrix};
use std::collections::HashMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecipeOp {
    Load(PathBuf),
    RowReduce(String),
    /// Delete one column outright (triorthogonality-preserving when the
    /// column has at most one 1).
    DelCol(String, usize),
    /// Keep the rows with a 0 at the column, dropping the column.
    Shorten(String, usize),
    Extend(String, usize),
    DSum(String, String),
    Concat(String, String),
    Plotkin(String, PlotkinChoice),
    BuildUp(String, BitVec),
    Pad(String, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotkinChoice {
    Prime,
    DoublePrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub id: String,
    pub op: RecipeOp,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Recipe {
    pub steps: Vec<Step>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

pub fn parse_recipe(text: &str) -> Result<Recipe> {
    let mut steps = Vec::new();
    let mut defined: HashMap<String, ()> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 4 || tokens[2] != "=" {
            return Err(parse_err(
                lineno,
                "expected `load <id> = <file>` or `node <id> = <op> <args>`",
            ));
        }
        let id = tokens[1];
        if !valid_id(id) {
            return Err(parse_err(lineno, format!("invalid id {id:?}")));
        }
        if defined.contains_key(id) {
            return Err(parse_err(lineno, format!("id {id:?} defined twice")));
        }
        let reference = |name: &str| -> Result<String> {
            if !defined.contains_key(name) {
                return Err(parse_err(lineno, format!("undefined node {name:?}")));
            }
            Ok(name.to_string())
        };
        let parse_num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| parse_err(lineno, format!("bad number {s:?}")))
        };
        let args = &tokens[3..];
        let arity = |want: usize| -> Result<()> {
            if args.len() != want + 1 {
                return Err(parse_err(
                    lineno,
                    format!("{} takes {want} argument(s)", args[0]),
                ));
            }
            Ok(())
        };
        let op = match tokens[0] {
            "load" => {
                if args.len() != 1 {
                    return Err(parse_err(lineno, "load takes a single file path"));
                }
                RecipeOp::Load(PathBuf::from(args[0]))
            }
            "node" => match args[0] {
                "rowreduce" => {
                    arity(1)?;
                    RecipeOp::RowReduce(reference(args[1])?)
                }
                "delcol" => {
                    arity(2)?;
                    RecipeOp::DelCol(reference(args[1])?, parse_num(args[2])?)
                }
                "shorten" => {
                    arity(2)?;
                    RecipeOp::Shorten(reference(args[1])?, parse_num(args[2])?)
                }
                "extend" => {
                    arity(2)?;
                    RecipeOp::Extend(reference(args[1])?, parse_num(args[2])?)
                }
                "dsum" => {
                    arity(2)?;
                    RecipeOp::DSum(reference(args[1])?, reference(args[2])?)
                }
                "concat" => {
                    arity(2)?;
                    RecipeOp::Concat(reference(args[1])?, reference(args[2])?)
                }
                "plotkin" => {
                    arity(2)?;
                    let choice = match args[2] {
                        "prime" => PlotkinChoice::Prime,
                        "double" => PlotkinChoice::DoublePrime,
                        other => {
                            return Err(parse_err(
                                lineno,
                                format!("plotkin variant must be prime or double, got {other:?}"),
                            ))
                        }
                    };
                    RecipeOp::Plotkin(reference(args[1])?, choice)
                }
                "buildup" => {
                    arity(2)?;
                    RecipeOp::BuildUp(reference(args[1])?, BitVec::from_str01(args[2])?)
                }
                "pad" => {
                    arity(2)?;
                    RecipeOp::Pad(reference(args[1])?, parse_num(args[2])?)
                }
                other => return Err(parse_err(lineno, format!("unknown operation {other:?}"))),
            },
            other => return Err(parse_err(lineno, format!("unknown directive {other:?}"))),
        };
        defined.insert(id.to_string(), ());
        steps.push(Step {
            id: id.to_string(),
            op,
        });
    }
    Ok(Recipe { steps })
}

/// Distance annotation on a node report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DzNote {
    Exact(usize),
    /// No odd-weight rows, so there is nothing to measure.
    NoOddRows,
    /// The node is not a valid triorthogonal code presentation.
    NotApplicable(String),
    /// Enumeration over budget; carries a sampled non-exact upper bound.
    OverBudget {
        needed_log2: u32,
        upper_bound: Option<usize>,
    },
}

impl std::fmt::Display for DzNote {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DzNote::Exact(d) => write!(f, "d_Z = {d}"),
            DzNote::NoOddRows => write!(f, "k = 0, d_Z not defined"),
            DzNote::NotApplicable(why) => write!(f, "params not applicable: {why}"),
            DzNote::OverBudget {
                needed_log2,
                upper_bound,
            } => {
                write!(f, "d_Z over budget (needs 2^{needed_log2})")?;
                if let Some(ub) = upper_bound {
                    write!(f, ", sampled non-exact upper bound {ub}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct NodeReport {
    pub id: String,
    pub nrows: usize,
    pub ncols: usize,
    pub triorthogonal: bool,
    pub full_rank: bool,
    pub k: Option<usize>,
    pub dz: DzNote,
}

impl NodeReport {
    pub fn summary(&self) -> String {
        let mut s = format!("{}: {}x{}", self.id, self.nrows, self.ncols);
        if !self.triorthogonal {
            s.push_str(" [not triorthogonal]");
            return s;
        }
        if !self.full_rank {
            s.push_str(" [warning: rank-deficient]");
        }
        match (self.k, &self.dz) {
            (Some(k), DzNote::Exact(d)) => s.push_str(&format!(" [[{},{},{}]]", self.ncols, k, d)),
            (Some(0), DzNote::NoOddRows) => s.push_str(&format!(" [[{},0,-]]", self.ncols)),
            (Some(k), other) => s.push_str(&format!(" [[{},{},?]] ({other})", self.ncols, k)),
            (None, note) => s.push_str(&format!(" ({note})")),
        }
        s
    }
}

/// Executes a recipe bottom-up. Input files are resolved against
/// `base_dir`; every node's matrix is written to `out_dir` (when given) as
/// `<id>.mat`. Construction errors abort with the failing node named;
/// degenerate but representable outcomes (rank-deficient nodes, k = 0) are
/// reported and execution continues.
pub fn run_recipe(
    recipe: &Recipe,
    base_dir: &Path,
    out_dir: Option<&Path>,
    limit: u64,
) -> Result<Vec<NodeReport>> {
    let mut values: HashMap<String, BitMatrix> = HashMap::new();
    let mut reports = Vec::new();
    for step in &recipe.steps {
        let matrix = execute_step(step, base_dir, &values)
            .map_err(|e| Error::Recipe(format!("node {:?}: {e}", step.id)))?;
        if let Some(dir) = out_dir {
            std::fs::create_dir_all(dir).map_err(|e| Error::Io {
                path: dir.display().to_string(),
                msg: e.to_string(),
            })?;
            io::write_matrix_file(&dir.join(format!("{}.mat", step.id)), &matrix)?;
        }
        reports.push(report_node(&step.id, &matrix, limit));
        values.insert(step.id.clone(), matrix);
    }
    Ok(reports)
}

fn execute_step(
    step: &Step,
    base_dir: &Path,
    values: &HashMap<String, BitMatrix>,
) -> Result<BitMatrix> {
    let get = |id: &String| -> Result<&BitMatrix> {
        values
            .get(id)
            .ok_or_else(|| Error::Recipe(format!("undefined node {id:?}")))
    };
    let as_tri = |id: &String| -> Result<TriMatrix> {
        TriMatrix::partition_rows(get(id)?.clone())
    };
    Ok(match &step.op {
        RecipeOp::Load(path) => io::read_matrix_file(&base_dir.join(path))?,
        RecipeOp::RowReduce(src) => get(src)?.rref().0,
        RecipeOp::DelCol(src, c) => constructions::delete_column(get(src)?, *c)?,
        RecipeOp::Shorten(src, c) => constructions::shorten(&as_tri(src)?, *c)?.matrix,
        RecipeOp::Extend(src, r) => constructions::extend(&as_tri(src)?, *r)?.into_matrix(),
        RecipeOp::DSum(a, b) => constructions::block_diag(get(a)?, get(b)?),
        RecipeOp::Concat(a, b) => constructions::concat_columns(get(a)?, get(b)?)?,
        RecipeOp::Plotkin(src, choice) => {
            let variants = constructions::plotkin_variants(&as_tri(src)?);
            match choice {
                PlotkinChoice::Prime => variants.prime,
                PlotkinChoice::DoublePrime => variants.double_prime,
            }
        }
        RecipeOp::BuildUp(src, x) => constructions::building_up(get(src)?, x)?,
        RecipeOp::Pad(src, t) => constructions::pad_with_selfdual(&as_tri(src)?, *t)?.into_matrix(),
    })
}

fn report_node(id: &str, matrix: &BitMatrix, limit: u64) -> NodeReport {
    let tri = check_trimatrix(matrix);
    let mut report = NodeReport {
        id: id.to_string(),
        nrows: matrix.nrows(),
        ncols: matrix.ncols(),
        triorthogonal: tri.is_ok(),
        full_rank: matrix.rank() == matrix.nrows(),
        k: None,
        dz: DzNote::NotApplicable("not triorthogonal".into()),
    };
    if !report.triorthogonal {
        return report;
    }
    if !report.full_rank {
        report.dz = DzNote::NotApplicable("rank-deficient".into());
        return report;
    }
    let t = TriMatrix::partition_rows(matrix.clone()).expect("validated above");
    report.k = Some(t.k());
    report.dz = if t.k() == 0 {
        DzNote::NoOddRows
    } else {
        match exact_dz(&t, limit) {
            Ok(d) => DzNote::Exact(d),
            Err(Error::BudgetExceeded {
                needed_log2,
                upper_bound,
                ..
            }) => DzNote::OverBudget {
                needed_log2,
                upper_bound,
            },
            Err(e) => DzNote::NotApplicable(e.to_string()),
        }
    };
    report
}

/// Compositional parameters for recipe display: exact distances propagate
/// through dsum and pad; other operations leave the distance unknown.
pub fn node_param_rule(op: &RecipeOp, child_dz: &[DzValue]) -> DzValue {
    match op {
        RecipeOp::DSum(_, _) => match child_dz {
            [a, b] => DzValue::min(a, b),
            _ => DzValue::Unknown,
        },
        RecipeOp::Pad(_, _) => child_dz.first().copied().unwrap_or(DzValue::Unknown),
        _ => DzValue::Unknown,
    }
}
