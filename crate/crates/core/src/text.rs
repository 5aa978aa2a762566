//! Plain-text formats.
//!
//! ```text
//! HF <N> <k>
//! W <w1> ... <wN>            (optional)
//! # strength <t> parts <p>   (optional claim)
//! <N lines of k symbols>
//! ```
//!
//! Other lines starting with `#` are comments. Without a `W` line the rows
//! are relabeled by first appearance and widths are the distinct counts, so
//! 1-based or otherwise arbitrary labels are accepted. With a `W` line the
//! symbols are kept and must lie below the declared widths.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::{canonicalize, HashFamily, Symbol};

/// Numbered lines with `#` comments removed; blank lines are kept.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
}

/// Parses whitespace-separated non-negative integers.
pub(crate) fn parse_numbers(line: usize, s: &str) -> Result<Vec<u64>> {
    s.split_whitespace()
        .map(|tok| {
            if tok.starts_with('-') {
                return Err(Error::parse(line, format!("negative value {tok}")));
            }
            tok.parse::<u64>()
                .map_err(|_| Error::parse(line, format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

/// Splits `TAG a b c` and checks the tag and arity.
pub(crate) fn parse_header(line: usize, s: &str, tag: &str, arity: usize) -> Result<Vec<usize>> {
    let mut toks = s.split_whitespace();
    if toks.next() != Some(tag) {
        return Err(Error::parse(
            line,
            format!("expected header starting with {tag}"),
        ));
    }
    let rest: Vec<&str> = toks.collect();
    if rest.len() != arity {
        return Err(Error::parse(
            line,
            format!("{tag} header needs {arity} fields, found {}", rest.len()),
        ));
    }
    let nums = parse_numbers(line, &rest.join(" "))?;
    Ok(nums.into_iter().map(|x| x as usize).collect())
}

fn to_symbol(line: usize, x: u64) -> Result<Symbol> {
    Symbol::try_from(x).map_err(|_| Error::parse(line, format!("symbol {x} too large")))
}

pub fn serialize_family(a: &HashFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "HF {} {}", a.rows(), a.cols());
    if a.widths() != a.distinct_counts().as_slice() || !a.is_first_appearance_ordered() {
        let ws: Vec<String> = a.widths().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "W {}", ws.join(" "));
    }
    if let (Some(t), Some(p)) = (a.claimed_strength(), a.claimed_parts()) {
        let _ = writeln!(out, "# strength {t} parts {p}");
    }
    for row in a.row_iter() {
        let syms: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", syms.join(" "));
    }
    out
}

pub fn parse_family(text: &str) -> Result<HashFamily> {
    let mut claim = None;
    for (i, l) in text.lines().enumerate() {
        if let Some(rest) = l.trim().strip_prefix('#') {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if let ["strength", t, "parts", p] = toks.as_slice() {
                let t = t.parse().map_err(|_| Error::parse(i + 1, "bad strength"))?;
                let p = p.parse().map_err(|_| Error::parse(i + 1, "bad parts"))?;
                claim = Some((t, p));
            }
        }
    }
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let dims = parse_header(hl, header, "HF", 2)?;
    let (n, k) = (dims[0], dims[1]);
    if n == 0 || k == 0 {
        return Err(Error::parse(hl, "HF needs at least one row and one column"));
    }
    let mut widths = None;
    let mut raw: Vec<Vec<u64>> = Vec::with_capacity(n);
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix('W') {
            if widths.is_some() || !raw.is_empty() {
                return Err(Error::parse(ln, "W line must directly follow the header"));
            }
            let ws = parse_numbers(ln, rest)?;
            if ws.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("W line needs {n} widths, found {}", ws.len()),
                ));
            }
            widths = Some(ws.into_iter().map(|w| w as usize).collect::<Vec<_>>());
            continue;
        }
        if raw.len() == n {
            return Err(Error::parse(ln, format!("more than {n} rows")));
        }
        let row = parse_numbers(ln, l)?;
        if row.len() != k {
            return Err(Error::parse(
                ln,
                format!("expected {k} symbols, found {}", row.len()),
            ));
        }
        raw.push(row);
    }
    if raw.len() != n {
        return Err(Error::parse(
            0,
            format!("expected {n} rows, found {}", raw.len()),
        ));
    }
    let fam = match widths {
        None => canonicalize(&raw, None)?,
        Some(ws) => {
            let rows = raw
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| to_symbol(0, x))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            HashFamily::new(rows, ws)?
        }
    };
    Ok(match claim {
        Some((t, p)) => fam.with_claim(t, p),
        None => fam,
    })
}
