//! Heterogeneous hash families.
//!
//! A family is an `N x k` matrix of symbols. Symbols are local to their row:
//! row `r` draws from the alphabet `0..widths[r]`, and symbols in different
//! rows are never compared. Widths are carried explicitly and may exceed the
//! number of symbols a row actually uses.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Symbol = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HashFamily {
    rows: usize,
    cols: usize,
    cells: Vec<Symbol>,
    widths: Vec<usize>,
    claimed_strength: Option<usize>,
    claimed_parts: Option<usize>,
}

impl HashFamily {
    /// Builds a family from rows that already use local alphabets `0..widths[r]`.
    /// Symbols are kept as given.
    pub fn new(rows: Vec<Vec<Symbol>>, widths: Vec<usize>) -> Result<Self> {
        let (n, k) = check_shape(&rows)?;
        if widths.len() != n {
            return Err(Error::WidthCount {
                expected: n,
                found: widths.len(),
            });
        }
        for (r, (row, &w)) in rows.iter().zip(&widths).enumerate() {
            if let Some(&s) = row.iter().find(|&&s| s as usize >= w) {
                return Err(Error::SymbolOutOfRange {
                    row: r,
                    symbol: s as u64,
                    width: w,
                });
            }
        }
        Ok(Self {
            rows: n,
            cols: k,
            cells: rows.into_iter().flatten().collect(),
            widths,
            claimed_strength: None,
            claimed_parts: None,
        })
    }

    /// Like [`HashFamily::new`] with each width set to the row's largest symbol plus one.
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        check_shape(&rows)?;
        let widths = rows
            .iter()
            .map(|row| row.iter().max().map_or(0, |&m| m as usize + 1))
            .collect();
        Self::new(rows, widths)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Symbol]> + '_ {
        self.cells.chunks_exact(self.cols)
    }

    pub fn symbol(&self, r: usize, c: usize) -> Symbol {
        self.cells[r * self.cols + c]
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn max_width(&self) -> usize {
        self.widths.iter().copied().max().unwrap_or(0)
    }

    pub fn total_width(&self) -> usize {
        self.widths.iter().sum()
    }

    pub fn claimed_strength(&self) -> Option<usize> {
        self.claimed_strength
    }

    pub fn claimed_parts(&self) -> Option<usize> {
        self.claimed_parts
    }

    /// Attaches claimed `(t, p)` metadata. Nothing is verified.
    pub fn with_claim(mut self, strength: usize, parts: usize) -> Self {
        self.claimed_strength = Some(strength);
        self.claimed_parts = Some(parts);
        self
    }

    pub fn without_claim(mut self) -> Self {
        self.claimed_strength = None;
        self.claimed_parts = None;
        self
    }

    /// Replaces declared widths; each must cover the symbols present.
    pub fn with_widths(self, widths: Vec<usize>) -> Result<Self> {
        let claim = (self.claimed_strength, self.claimed_parts);
        let mut out = Self::new(self.to_rows(), widths)?;
        (out.claimed_strength, out.claimed_parts) = claim;
        Ok(out)
    }

    pub fn to_rows(&self) -> Vec<Vec<Symbol>> {
        self.row_iter().map(<[Symbol]>::to_vec).collect()
    }

    pub fn distinct_in_row(&self, r: usize) -> usize {
        let mut seen = vec![false; self.widths[r]];
        self.row(r)
            .iter()
            .filter(|&&s| !std::mem::replace(&mut seen[s as usize], true))
            .count()
    }

    pub fn distinct_counts(&self) -> Vec<usize> {
        (0..self.rows).map(|r| self.distinct_in_row(r)).collect()
    }

    /// True when row `r` gives every column a different symbol.
    pub fn row_is_injective(&self, r: usize) -> bool {
        self.distinct_in_row(r) == self.cols
    }

    /// True when every row labels its symbols in order of first appearance.
    pub fn is_first_appearance_ordered(&self) -> bool {
        self.row_iter().all(|row| {
            let mut next = 0;
            row.iter().all(|&s| {
                if s < next {
                    true
                } else if s == next {
                    next += 1;
                    true
                } else {
                    false
                }
            })
        })
    }

    /// Copy with row `r` removed; `None` when that would leave no rows.
    pub fn without_row(&self, r: usize) -> Option<Self> {
        if self.rows <= 1 || r >= self.rows {
            return None;
        }
        let rows = self
            .row_iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row.to_vec())
            .collect();
        let widths = self
            .widths
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, &w)| w)
            .collect();
        Some(Self::new(rows, widths).expect("sub-family of a valid family"))
    }

    /// Width profile in exponential notation, grouping equal consecutive widths:
    /// `165^3 166^1`.
    pub fn width_profile(&self) -> String {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &w in &self.widths {
            match groups.last_mut() {
                Some((gw, count)) if *gw == w => *count += 1,
                _ => groups.push((w, 1)),
            }
        }
        groups
            .iter()
            .map(|(w, u)| format!("{w}^{u}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for HashFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HHF({}; {}, ({}))",
            self.rows,
            self.cols,
            self.width_profile()
        )?;
        if let (Some(t), Some(p)) = (self.claimed_strength, self.claimed_parts) {
            write!(f, " t={t} p={p}")?;
        }
        Ok(())
    }
}

fn check_shape<T>(rows: &[Vec<T>]) -> Result<(usize, usize)> {
    let n = rows.len();
    let k = rows.first().map_or(0, Vec::len);
    if n == 0 || k == 0 {
        return Err(Error::Empty);
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != k {
            return Err(Error::Ragged {
                row: r,
                expected: k,
                found: row.len(),
            });
        }
    }
    Ok((n, k))
}

/// Relabels each row's symbols to `0..distinct` in order of first appearance.
/// Widths default to the distinct counts; declared widths may exceed them.
pub fn canonicalize(raw: &[Vec<u64>], widths: Option<&[usize]>) -> Result<HashFamily> {
    let (n, _) = check_shape(raw)?;
    let mut rows = Vec::with_capacity(n);
    let mut distinct = Vec::with_capacity(n);
    for row in raw {
        let mut labels: HashMap<u64, Symbol> = HashMap::new();
        let relabeled: Vec<Symbol> = row
            .iter()
            .map(|&s| {
                let next = labels.len() as Symbol;
                *labels.entry(s).or_insert(next)
            })
            .collect();
        distinct.push(labels.len());
        rows.push(relabeled);
    }
    let widths = match widths {
        None => distinct,
        Some(w) => {
            if w.len() != n {
                return Err(Error::WidthCount {
                    expected: n,
                    found: w.len(),
                });
            }
            for (r, (&declared, &d)) in w.iter().zip(&distinct).enumerate() {
                if declared < d {
                    return Err(Error::WidthTooSmall {
                        row: r,
                        declared,
                        distinct: d,
                    });
                }
            }
            w.to_vec()
        }
    };
    HashFamily::new(rows, widths)
}

/// Juxtaposes families with row-wise disjoint alphabets. In row `r`, block
/// `c`'s symbols are shifted by the declared widths of the blocks before it,
/// so the result's width in row `r` is the sum of the blocks' widths.
/// Claimed metadata is dropped.
pub fn concat_disjoint(families: &[HashFamily]) -> Result<HashFamily> {
    let first = families
        .first()
        .ok_or_else(|| Error::invalid("concat_disjoint needs at least one family"))?;
    let n = first.rows;
    if let Some(bad) = families.iter().find(|f| f.rows != n) {
        return Err(Error::RowCountMismatch {
            expected: n,
            found: bad.rows,
        });
    }
    let k: usize = families.iter().map(|f| f.cols).sum();
    let mut rows = vec![Vec::with_capacity(k); n];
    let mut widths = vec![0usize; n];
    for fam in families {
        for (r, row) in rows.iter_mut().enumerate() {
            let offset = widths[r] as Symbol;
            row.extend(fam.row(r).iter().map(|&s| s + offset));
            widths[r] += fam.widths[r];
        }
    }
    HashFamily::new(rows, widths)
}
