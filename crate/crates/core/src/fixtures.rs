//! Reference matrices shipped with the crate, embedded so tools and tests
//! never depend on the working directory. The same files live under
//! `fixtures/` for use from the command line.

use crate::gf2::BitMatrix;
use crate::io;
use crate::triortho::TriMatrix;

pub const TRI14: &str = include_str!("../fixtures/tri14.mat");
pub const TRI15_EXT: &str = include_str!("../fixtures/tri15_ext.mat");
pub const TRI16: &str = include_str!("../fixtures/tri16.mat");
pub const TRI15: &str = include_str!("../fixtures/tri15.mat");
pub const TRI14B: &str = include_str!("../fixtures/tri14b.mat");
pub const SELFDUAL10: &str = include_str!("../fixtures/selfdual10.mat");
pub const SELFDUAL8: &str = include_str!("../fixtures/selfdual8.mat");
pub const BEST_DZ_CSV: &str = include_str!("../fixtures/best_dz.csv");
pub const PIPELINE_RECIPE: &str = include_str!("../fixtures/pipeline.recipe");

/// Names of the matrix fixtures, as used by file-based overrides.
pub const MATRIX_FIXTURE_NAMES: [&str; 7] = [
    "tri14.mat",
    "tri15_ext.mat",
    "tri16.mat",
    "tri15.mat",
    "tri14b.mat",
    "selfdual10.mat",
    "selfdual8.mat",
];

pub fn embedded_matrix(name: &str) -> Option<&'static str> {
    match name {
        "tri14.mat" => Some(TRI14),
        "tri15_ext.mat" => Some(TRI15_EXT),
        "tri16.mat" => Some(TRI16),
        "tri15.mat" => Some(TRI15),
        "tri14b.mat" => Some(TRI14B),
        "selfdual10.mat" => Some(SELFDUAL10),
        "selfdual8.mat" => Some(SELFDUAL8),
        _ => None,
    }
}

fn parse(text: &str) -> BitMatrix {
    io::parse_matrix(text).expect("embedded fixture parses")
}

fn tri(text: &str) -> TriMatrix {
    TriMatrix::partition_rows(parse(text)).expect("embedded fixture is triorthogonal")
}

/// 5×14 triorthogonal matrix with parameters `[[14,2,2]]`.
pub fn tri14() -> TriMatrix {
    tri(TRI14)
}

/// 5×15 extension of [`tri14`], parameters `[[15,1,3]]`.
pub fn tri15_ext() -> TriMatrix {
    tri(TRI15_EXT)
}

/// Full-rank 5×16 triorthogonal matrix whose rows all have even weight.
pub fn tri16() -> TriMatrix {
    tri(TRI16)
}

/// 5×15 triorthogonal matrix with parameters `[[15,1,3]]`; equals the
/// reduced [`tri16`] with its first pivot column deleted.
pub fn tri15() -> TriMatrix {
    tri(TRI15)
}

/// 5×14 triorthogonal matrix with parameters `[[14,2,2]]`; equals [`tri15`]
/// with its first column deleted.
pub fn tri14b() -> TriMatrix {
    tri(TRI14B)
}

/// Generator of a `[10,5]` self-dual code, the search fixture.
pub fn selfdual10() -> BitMatrix {
    parse(SELFDUAL10)
}

/// Generator of the `[8,4]` self-dual code that is not triorthogonal.
pub fn selfdual8() -> BitMatrix {
    parse(SELFDUAL8)
}

/// The best-known `(n, k) -> d_Z` table rows as `(n, k, dz)` triples.
pub fn best_dz_table() -> Vec<(usize, usize, usize)> {
    parse_dz_csv(BEST_DZ_CSV).expect("embedded table parses")
}

/// Parses a `n,k,dz` CSV with a header line.
pub fn parse_dz_csv(text: &str) -> crate::error::Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || lineno == 0 {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(crate::error::Error::Parse {
                line: lineno + 1,
                msg: format!("expected 3 fields, got {}", fields.len()),
            });
        }
        let parse = |s: &str| -> crate::error::Result<usize> {
            s.trim().parse().map_err(|_| crate::error::Error::Parse {
                line: lineno + 1,
                msg: format!("bad integer {s:?}"),
            })
        };
        out.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shapes() {
        assert_eq!(tri16().matrix().rank(), 5);
        assert_eq!((tri14().n(), tri14().k()), (14, 2));
        assert_eq!((tri15_ext().n(), tri15_ext().k()), (15, 1));
        assert_eq!((tri16().n(), tri16().k()), (16, 0));
        assert_eq!((tri15().n(), tri15().k()), (15, 1));
        assert_eq!((tri14b().n(), tri14b().k()), (14, 2));
        assert_eq!(selfdual10().nrows(), 5);
        assert_eq!(selfdual8().ncols(), 8);
    }

    #[test]
    fn dz_table_covers_all_listed_lengths() {
        // 29 lengths with three filled cells each, except the first two
        // lengths which carry only two.
        let table = best_dz_table();
        assert_eq!(table.len(), 85);
        assert!(table.iter().all(|&(n, k, d)| (38..=66).contains(&n)
            && (2..=7).contains(&k)
            && (1..=3).contains(&d)));
    }
}
