//! Plain-text tournament files.
//!
//! ```text
//! 3
//! -10
//! 0-1
//! 10-
//! ```
//!
//! Line 1 holds `n`; row `i` column `j` is `1` iff `i` beats `j`, `0` iff `j`
//! beats `i`, and `-` on the diagonal.

use crate::error::{Error, Result};
use crate::tournament::Tournament;

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

pub fn parse(text: &str) -> Result<Tournament> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(1, 1, format!("expected vertex count, found `{header}`")))?;
    if n == 0 {
        return Err(parse_err(1, 1, "vertex count must be positive"));
    }

    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
    for i in 0..n {
        let line_no = i + 2;
        let row = lines
            .next()
            .ok_or_else(|| parse_err(line_no, 1, format!("expected {n} rows, found {i}")))?;
        let bytes = row.as_bytes();
        for (j, &c) in bytes.iter().enumerate() {
            let ok = if i == j { c == b'-' } else { c == b'0' || c == b'1' };
            if !ok {
                let want = if i == j { "`-`" } else { "`0` or `1`" };
                return Err(parse_err(
                    line_no,
                    j + 1,
                    format!("expected {want}, found `{}`", c as char),
                ));
            }
        }
        if bytes.len() != n {
            return Err(parse_err(
                line_no,
                bytes.len().min(n) + 1,
                format!("row has {} cells, expected {n}", bytes.len()),
            ));
        }
        rows.push(bytes.to_vec());
    }
    for (k, extra) in lines.enumerate() {
        if !extra.trim().is_empty() {
            return Err(parse_err(n + 2 + k, 1, "trailing content after last row"));
        }
    }

    for i in 0..n {
        for j in (i + 1)..n {
            if rows[i][j] == rows[j][i] {
                return Err(parse_err(
                    j + 2,
                    i + 1,
                    format!("cell ({j},{i}) must be the complement of cell ({i},{j})"),
                ));
            }
        }
    }
    Ok(Tournament::from_fn(n, |i, j| rows[i][j] == b'1'))
}

pub fn write(t: &Tournament) -> String {
    let n = t.n();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 8);
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        for j in 0..n {
            out.push(match (i == j, t.beats(i, j)) {
                (true, _) => '-',
                (false, true) => '1',
                (false, false) => '0',
            });
        }
        out.push('\n');
    }
    out
}
