//! The matrix text format used by every command.
//!
//! Layout: optional `#` comment lines, then a header `nrows ncols`, then
//! `nrows` lines of exactly `ncols` characters from `{0,1}` with no
//! separators. Blank lines are skipped; any other character is rejected.
//! Writers emit exactly the header plus the rows.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

/// Guards against absurd allocations from hostile headers.
const MAX_CELLS: usize = 1 << 27;
const MAX_DIM: usize = 1 << 20;

pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line".into(),
    })?;
    let (nrows, ncols) = parse_header(header_line, header)?;
    if nrows > MAX_DIM || ncols > MAX_DIM || nrows.saturating_mul(ncols.max(1)) > MAX_CELLS {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("matrix too large: {nrows} x {ncols}"),
        });
    }
    if ncols == 0 && nrows > 0 {
        return Err(Error::Parse {
            line: header_line,
            msg: "rows must have at least one column".into(),
        });
    }

    let mut rows = Vec::with_capacity(nrows);
    for _ in 0..nrows {
        let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
            line: header_line,
            msg: format!("expected {nrows} rows, file ended early"),
        })?;
        if line.len() != ncols {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected {ncols} characters, got {}", line.len()),
            });
        }
        let mut row = BitVec::zeros(ncols);
        for (i, c) in line.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => row.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("invalid character {:?} in row", other as char),
                    })
                }
            }
        }
        rows.push(row);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            msg: "trailing content after the last row".into(),
        });
    }
    Ok(if rows.is_empty() {
        BitMatrix::empty(ncols)
    } else {
        BitMatrix::from_rows(rows)?
    })
}

fn parse_header(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split(' ').filter(|f| !f.is_empty()).collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("header must be `nrows ncols`, got {line:?}"),
        });
    }
    let parse = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("bad count {s:?}"),
            });
        }
        s.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("count {s:?} out of range"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn write_matrix(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.nrows(), m.ncols());
    for row in m.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

pub fn read_matrix_file(path: &std::path::Path) -> Result<BitMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_matrix(&text)
}

pub fn write_matrix_file(path: &std::path::Path, m: &BitMatrix) -> Result<()> {
    std::fs::write(path, write_matrix(m)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}
