//! Covering arrays: verification, small generators and column replacement.
//!
//! Text format:
//!
//! ```text
//! CA <N> <k> <v> <t>
//! <N lines of k symbols in 0..v>
//! ```

mod compose;
mod greedy;

pub use compose::{compose_dhf, compose_hetgen, compose_phf, hetgen_row_count};
pub use greedy::greedy_ca;

use std::fmt::Write as _;

use crate::combinatorics::{binomial, combination_rank, first_failing_subset};
use crate::error::{Error, Result};
use crate::family::Symbol;
use crate::report::{Mode, VerifyReport, Witness};
use crate::text::{content_lines, parse_header, parse_numbers};

/// Largest `v^t` accepted by [`verify_ca`].
const MAX_TUPLES: u64 = 1 << 26;

/// An `N x k` array over `0..v` with a claimed strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringArray {
    rows: usize,
    cols: usize,
    v: usize,
    strength: usize,
    cells: Vec<Symbol>,
}

impl CoveringArray {
    pub fn new(rows: Vec<Vec<Symbol>>, v: usize, strength: usize) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if n == 0 || k == 0 {
            return Err(Error::Empty);
        }
        if v == 0 || strength == 0 {
            return Err(Error::invalid(
                "alphabet size and strength must be at least 1",
            ));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Ragged {
                    row: r,
                    expected: k,
                    found: row.len(),
                });
            }
            if let Some(&s) = row.iter().find(|&&s| s as usize >= v) {
                return Err(Error::SymbolOutOfRange {
                    row: r,
                    symbol: s as u64,
                    width: v,
                });
            }
        }
        Ok(Self {
            rows: n,
            cols: k,
            v,
            strength,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn strength(&self) -> usize {
        self.strength
    }

    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Symbol]> + '_ {
        self.cells.chunks_exact(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<Symbol>> {
        self.row_iter().map(<[Symbol]>::to_vec).collect()
    }

    /// Symbol of row `r` if the row is constant.
    pub fn constant_symbol(&self, r: usize) -> Option<Symbol> {
        let row = self.row(r);
        row.iter().all(|&s| s == row[0]).then_some(row[0])
    }

    /// Indices of the constant rows that count towards `rho`: the first
    /// constant row for each symbol. Later constant rows repeating a symbol
    /// are treated as ordinary rows.
    pub fn constant_row_indices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.v];
        (0..self.rows)
            .filter(|&r| match self.constant_symbol(r) {
                Some(s) => !std::mem::replace(&mut seen[s as usize], true),
                None => false,
            })
            .collect()
    }

    /// `rho`: the number of symbols owning a constant row.
    pub fn constant_rows(&self) -> usize {
        self.constant_row_indices().len()
    }

    pub fn with_strength(mut self, strength: usize) -> Self {
        self.strength = strength;
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "CA {} {} {} {}\n",
            self.rows, self.cols, self.v, self.strength
        );
        for row in self.row_iter() {
            let syms: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", syms.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let dims = parse_header(hl, header, "CA", 4)?;
        let (n, k, v, t) = (dims[0], dims[1], dims[2], dims[3]);
        let mut rows = Vec::with_capacity(n);
        for (ln, l) in lines {
            if rows.len() == n {
                return Err(Error::parse(ln, format!("more than {n} rows")));
            }
            let row = parse_numbers(ln, l)?;
            if row.len() != k {
                return Err(Error::parse(
                    ln,
                    format!("expected {k} symbols, found {}", row.len()),
                ));
            }
            if let Some(&s) = row.iter().find(|&&s| s >= v as u64) {
                return Err(Error::parse(ln, format!("symbol {s} outside 0..{v}")));
            }
            rows.push(row.into_iter().map(|s| s as Symbol).collect());
        }
        if rows.len() != n {
            return Err(Error::parse(
                0,
                format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        Self::new(rows, v, t)
    }
}

fn tuple_count(v: usize, t: usize) -> Result<u64> {
    (v as u64)
        .checked_pow(t as u32)
        .filter(|&c| c <= MAX_TUPLES)
        .ok_or_else(|| Error::invalid(format!("{v}^{t} tuples per column set is too many")))
}

/// Exhaustive check that every `t` columns show every tuple over `0..v`.
/// Column sets and tuples are scanned in lexicographic order; the witness is
/// the first missing pair.
pub fn verify_ca(ca: &CoveringArray, t: usize) -> Result<VerifyReport> {
    if t == 0 {
        return Err(Error::invalid("strength must be at least 1"));
    }
    if ca.cols < t {
        return Err(Error::StrengthExceedsColumns { k: ca.cols, t });
    }
    let per_subset = tuple_count(ca.v, t)?;
    let v = ca.v as u64;
    let hit = first_failing_subset(
        ca.cols,
        t,
        || vec![false; per_subset as usize],
        |subset, seen| {
            seen.fill(false);
            for row in ca.row_iter() {
                let idx = subset.iter().fold(0u64, |acc, &c| acc * v + row[c] as u64);
                seen[idx as usize] = true;
            }
            seen.iter().position(|&s| !s)
        },
    );
    Ok(match hit {
        None => VerifyReport::pass(binomial(ca.cols, t) * per_subset as u128, Mode::Exhaustive),
        Some((subset, idx)) => {
            let checks = combination_rank(&subset, ca.cols) * per_subset as u128 + idx as u128 + 1;
            let mut tuple = vec![0; t];
            let mut rest = idx as u64;
            for slot in tuple.iter_mut().rev() {
                *slot = (rest % v) as Symbol;
                rest /= v;
            }
            let witness = Witness::MissingTuple {
                columns: subset,
                tuple,
            };
            VerifyReport::fail(witness, checks, Mode::Exhaustive)
        }
    })
}

/// CA(v^t; t, t, v): every tuple once, in lexicographic order.
pub fn full_factorial_ca(t: usize, v: usize) -> Result<CoveringArray> {
    if t == 0 || v == 0 {
        return Err(Error::invalid("full factorial needs t, v >= 1"));
    }
    let n = tuple_count(v, t)? as usize;
    let rows = (0..n)
        .map(|mut x| {
            let mut row = vec![0; t];
            for slot in row.iter_mut().rev() {
                *slot = (x % v) as Symbol;
                x /= v;
            }
            row
        })
        .collect();
    CoveringArray::new(rows, v, t)
}

/// Renames symbols column by column so the first row becomes all zeros.
pub fn normalize_constant_rows(ca: &CoveringArray) -> CoveringArray {
    let first = ca.row(0).to_vec();
    let rows = ca
        .row_iter()
        .map(|row| {
            row.iter()
                .zip(&first)
                .map(|(&s, &f)| {
                    if s == f {
                        0
                    } else if s == 0 {
                        f
                    } else {
                        s
                    }
                })
                .collect()
        })
        .collect();
    CoveringArray::new(rows, ca.v, ca.strength).expect("relabeling keeps symbols in range")
}
