//! Plain-text file formats.
//!
//! Everything after `#` on a line is ignored, as are blank lines.
//!
//! * block file: `v b`, then one block of 0-based points per line.
//! * matrix file: `n`, then n rows of n integers.
//! * group-subset file: `group n_1 ... n_r`, then one element tuple per line.

use std::fmt::Write as _;

use crate::algebra::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;
use crate::matrix::Matrix;
use crate::setdiff::GroupSubset;

/// Non-empty content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')')
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse()
                .map_err(|_| perr(line, format!("not a non-negative integer: {w:?}")))
        })
        .collect()
}

/// Repeated blocks are accepted; whether they are intended is up to the
/// caller.
pub fn parse_blocks(text: &str) -> Result<IncidenceStructure> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| perr(1, "empty file, expected `v b`"))?;
    let (v, b) = match numbers::<usize>(hl, header)?[..] {
        [v, b] => (v, b),
        _ => return Err(perr(hl, "expected `v b`")),
    };
    let mut blocks = Vec::with_capacity(b);
    for (ln, l) in lines {
        let block: Vec<usize> = numbers(ln, l)?;
        if let Some(&p) = block.iter().find(|&&p| p >= v) {
            return Err(perr(ln, format!("point {p} out of range for v={v}")));
        }
        let mut sorted = block.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != block.len() {
            return Err(perr(ln, "repeated point in block"));
        }
        blocks.push(block);
    }
    if blocks.len() != b {
        return Err(perr(
            hl,
            format!("header says {b} blocks, found {}", blocks.len()),
        ));
    }
    IncidenceStructure::from_blocks(v, blocks, true)
}

pub fn write_blocks(s: &IncidenceStructure) -> String {
    let mut out = String::new();
    if let Some(labels) = s.labels() {
        let _ = writeln!(out, "# labels: {}", labels.join(" "));
    }
    let _ = writeln!(out, "{} {}", s.v(), s.b());
    for blk in s.blocks() {
        let row: Vec<String> = blk.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix<i64>> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| perr(1, "empty file, expected `n`"))?;
    let n = header
        .parse::<usize>()
        .map_err(|_| perr(hl, "expected the order `n`"))?;
    let mut rows = Vec::with_capacity(n);
    for (ln, l) in lines {
        let row: Vec<i64> = l
            .split_whitespace()
            .map(|w| {
                w.parse()
                    .map_err(|_| perr(ln, format!("not an integer: {w:?}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(perr(
                ln,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(perr(hl, format!("expected {n} rows, found {}", rows.len())));
    }
    if n == 0 {
        return Err(perr(hl, "empty matrix"));
    }
    Matrix::from_rows(rows)
}

pub fn write_matrix(m: &Matrix<i64>) -> String {
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_group_subset(text: &str) -> Result<GroupSubset> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| perr(1, "empty file, expected `group n_1 ... n_r`"))?;
    let rest = header
        .strip_prefix("group")
        .ok_or_else(|| perr(hl, "expected `group n_1 ... n_r`"))?;
    let group = AbelianGroup::new(numbers(hl, rest)?).map_err(|e| perr(hl, e.to_string()))?;
    let r = group.factors().len();
    let mut elements = Vec::new();
    for (ln, l) in lines {
        let t: Vec<u32> = numbers(ln, l)?;
        if t.len() != r {
            return Err(perr(
                ln,
                format!("expected a {r}-tuple, found {} entries", t.len()),
            ));
        }
        let idx = group
            .index_of(&GroupElement(t))
            .map_err(|e| perr(ln, e.to_string()))?;
        if elements.contains(&idx) {
            return Err(perr(ln, "repeated element"));
        }
        elements.push(idx);
    }
    GroupSubset::new(group, elements)
}

pub fn write_group_subset(d: &GroupSubset) -> String {
    let f: Vec<String> = d.group().factors().iter().map(u32::to_string).collect();
    let mut out = format!("group {}\n", f.join(" "));
    for t in d.tuples() {
        let row: Vec<String> = t.0.iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
