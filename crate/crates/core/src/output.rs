//! Text formats for triangles and rectangular tables: plain, CSV, and OEIS
//! b-file (`index value` per line). All writers are deterministic
//! (row-major, column index ascending) and every line ends in `\n`.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::compositions::TriangleRow;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Bfile,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "bfile" => Ok(Format::Bfile),
            _ => Err(Error::domain("format", format!("unknown format {s:?}"))),
        }
    }
}

fn join(values: &[BigInt], sep: &str) -> String {
    values.iter().map(BigInt::to_string).collect::<Vec<_>>().join(sep)
}

fn bfile<'a>(values: impl Iterator<Item = &'a BigInt>, offset: u64) -> String {
    let mut out = String::new();
    for (i, v) in values.enumerate() {
        writeln!(out, "{} {v}", offset + i as u64).expect("writing to a String");
    }
    out
}

/// Triangle rows; CSV uses the header `n,k,value`, the b-file starts at index 0.
pub fn write_triangle(rows: &[TriangleRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for r in rows {
                writeln!(out, "{}", join(&r.values, " ")).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,k,value\n");
            for r in rows {
                for (k, v) in r.values.iter().enumerate() {
                    writeln!(out, "{},{k},{v}", r.n).unwrap();
                }
            }
        }
        Format::Bfile => out = bfile(rows.iter().flat_map(|r| r.values.iter()), 0),
    }
    out
}

/// Rectangular table whose row `i` is labeled `first_row + i` and column `j`
/// is labeled `first_col + j`. CSV is wide: a header of column labels, then
/// one line per row.
pub fn write_table(rows: &[Vec<BigInt>], first_row: usize, first_col: usize, format: Format) -> String {
    let mut out = String::new();
    let width = rows.first().map_or(0, Vec::len);
    match format {
        Format::Plain => {
            for r in rows {
                writeln!(out, "{}", join(r, " ")).unwrap();
            }
        }
        Format::Csv => {
            out.push('r');
            for j in 0..width {
                write!(out, ",{}", first_col + j).unwrap();
            }
            out.push('\n');
            for (i, r) in rows.iter().enumerate() {
                writeln!(out, "{},{}", first_row + i, join(r, ",")).unwrap();
            }
        }
        Format::Bfile => out = bfile(rows.iter().flatten(), 0),
    }
    out
}

fn parse_int(line: usize, s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse {
        line,
        detail: format!("not an integer: {s:?}"),
    })
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse {
        line,
        detail: format!("not an index: {s:?}"),
    })
}

/// `(index, value)` pairs of a b-file; blank lines and `#` comments skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, BigInt)>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(idx), Some(val), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse {
                line: no + 1,
                detail: "expected `index value`".into(),
            });
        };
        let idx = idx.parse().map_err(|_| Error::Parse {
            line: no + 1,
            detail: format!("bad index {idx:?}"),
        })?;
        out.push((idx, parse_int(no + 1, val)?));
    }
    Ok(out)
}

/// Split consecutive b-file values (starting at index 0) into triangle rows
/// of lengths 1, 2, 3, ...
pub fn triangle_from_bfile(text: &str) -> Result<Vec<Vec<BigInt>>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (pos, (idx, value)) in parse_bfile(text)?.into_iter().enumerate() {
        if idx != pos as u64 {
            return Err(Error::Parse {
                line: pos + 1,
                detail: format!("expected index {pos}, found {idx}"),
            });
        }
        let count = rows.len();
        match rows.last_mut() {
            Some(r) if r.len() < count => r.push(value),
            _ => rows.push(vec![value]),
        }
    }
    if rows.last().is_some_and(|r| r.len() < rows.len()) {
        return Err(Error::Parse {
            line: 0,
            detail: "last triangle row is incomplete".into(),
        });
    }
    Ok(rows)
}

/// Triangle rows from the `n,k,value` CSV, checking row-major order.
pub fn triangle_from_csv(text: &str) -> Result<Vec<Vec<BigInt>>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == "n,k,value" => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                detail: "missing `n,k,value` header".into(),
            })
        }
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: no + 1,
                detail: "expected three fields".into(),
            });
        }
        let n = parse_usize(no + 1, fields[0])?;
        let k = parse_usize(no + 1, fields[1])?;
        let value = parse_int(no + 1, fields[2])?;
        if k == 0 && n == rows.len() {
            rows.push(Vec::new());
        }
        let count = rows.len();
        match rows.last_mut() {
            Some(r) if n + 1 == count && k == r.len() && k <= n => r.push(value),
            _ => {
                return Err(Error::Parse {
                    line: no + 1,
                    detail: format!("cell ({n},{k}) out of order"),
                })
            }
        }
    }
    Ok(rows)
}

/// Rows of a wide CSV written by [`write_table`], without the label column.
pub fn table_from_csv(text: &str) -> Result<Vec<Vec<BigInt>>> {
    text.lines()
        .enumerate()
        .skip(1)
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(no, l)| l.split(',').skip(1).map(|v| parse_int(no + 1, v)).collect())
        .collect()
}
