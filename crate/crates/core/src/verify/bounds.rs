//! Necessary conditions that can refute a claimed family without a full
//! separation check.

use std::fmt;

use crate::combinatorics::{first_combination, next_combination};
use crate::error::{Error, Result};
use crate::family::HashFamily;

/// Outcome of a bound check; `holds` iff `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheckResult {
    pub name: &'static str,
    pub holds: bool,
    pub lhs: u64,
    pub rhs: u64,
    /// Offending columns, when the check can name some.
    pub witness: Option<Vec<usize>>,
}

impl BoundCheckResult {
    fn compare(name: &'static str, lhs: u64, rhs: u64) -> Self {
        Self {
            name,
            holds: lhs <= rhs,
            lhs,
            rhs,
            witness: None,
        }
    }
}

impl fmt::Display for BoundCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "FAILS" };
        write!(f, "{}: {} <= {} {verdict}", self.name, self.lhs, self.rhs)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w:?}")?;
        }
        Ok(())
    }
}

/// Marks the cells whose symbol occurs exactly once in their row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonArray {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl SingletonArray {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[bool] {
        &self.bits[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().filter(|&&b| b).count()
    }
}

pub fn singleton_array(a: &HashFamily) -> SingletonArray {
    let mut bits = Vec::with_capacity(a.rows() * a.cols());
    for (r, row) in a.row_iter().enumerate() {
        let mut freq = vec![0u32; a.widths()[r]];
        for &s in row {
            freq[s as usize] += 1;
        }
        bits.extend(row.iter().map(|&s| freq[s as usize] == 1));
    }
    SingletonArray {
        rows: a.rows(),
        cols: a.cols(),
        bits,
    }
}

/// Every `d`-set of columns must be all-singleton in some row of a family
/// of strength `rows + d` distributing at least `d + 1` parts.
///
/// `lhs` is the number of uncovered `d`-sets and `rhs` is 0; the witness is
/// the lexicographically first uncovered set.
pub fn check_singleton_cover(a: &HashFamily, d: usize) -> Result<BoundCheckResult> {
    if d == 0 {
        return Err(Error::invalid("singleton cover needs d >= 1"));
    }
    if d > a.cols() {
        return Err(Error::StrengthExceedsColumns { k: a.cols(), t: d });
    }
    let singles = singleton_array(a);
    let words = a.rows().div_ceil(64);
    // column masks over rows
    let mut masks = vec![0u64; a.cols() * words];
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if singles.get(r, c) {
                masks[c * words + r / 64] |= 1 << (r % 64);
            }
        }
    }
    let mut uncovered = 0u64;
    let mut witness = None;
    let mut combo = first_combination(d);
    let mut acc = vec![0u64; words];
    loop {
        acc.copy_from_slice(&masks[combo[0] * words..(combo[0] + 1) * words]);
        for &c in &combo[1..] {
            for (w, m) in acc.iter_mut().zip(&masks[c * words..(c + 1) * words]) {
                *w &= m;
            }
        }
        if acc.iter().all(|&w| w == 0) {
            uncovered += 1;
            witness.get_or_insert_with(|| combo.clone());
        }
        if !next_combination(&mut combo, a.cols(), 0) {
            break;
        }
    }
    let mut out = BoundCheckResult::compare("singleton-cover", uncovered, 0);
    out.witness = witness;
    Ok(out)
}

/// Column bound for families with fewer rows than strength: `k <= sum of
/// widths`. Only meaningful for `t > rows`.
pub fn check_column_bound(a: &HashFamily, t: usize) -> Result<BoundCheckResult> {
    if t <= a.rows() {
        return Err(Error::BoundNotApplicable(format!(
            "column bound needs strength above the row count ({t} <= {})",
            a.rows()
        )));
    }
    Ok(BoundCheckResult::compare(
        "column-bound",
        a.cols() as u64,
        a.total_width() as u64,
    ))
}

/// Column limit for a `t`-row family of strength `t` over `w` symbols:
/// `k <= w^2`, tightened to `k <= w^2 - w` from strength 4 on.
pub fn check_niu_cao(k: usize, w: usize, t: usize) -> BoundCheckResult {
    let w = w as u64;
    let rhs = if t >= 4 { w * w - w } else { w * w };
    BoundCheckResult::compare("niu-cao", k as u64, rhs)
}

/// True when every distributing family with `t` rows, strength `t` and `p`
/// parts is automatically perfect, i.e. `t < p(p+1)/2`.
pub fn implies_perfect(t: usize, p: usize) -> bool {
    t < p * (p + 1) / 2
}

/// Sufficient test for fractality of a perfect family of strength equal to
/// its row count: no row has more than one singleton. A `false` result is
/// inconclusive.
pub fn is_fractal_by_singletons(a: &HashFamily) -> bool {
    let singles = singleton_array(a);
    (0..a.rows()).all(|r| singles.row_count(r) <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::table1_phf;

    #[test]
    fn singleton_rows() {
        let a = HashFamily::from_rows(vec![vec![0, 1, 1], vec![0, 1, 2]]).unwrap();
        let s = singleton_array(&a);
        assert_eq!(s.row(0), &[true, false, false]);
        assert_eq!(s.row(1), &[true, true, true]);
        let phf = table1_phf();
        assert_eq!(
            singleton_array(&phf).row(0),
            &[false, false, true, true, true]
        );
    }

    #[test]
    fn singleton_cover_with_d1_needs_a_singleton_per_column() {
        let a = HashFamily::from_rows(vec![vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        assert!(check_singleton_cover(&a, 1).unwrap().holds);
        let constant = HashFamily::from_rows(vec![vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        let r = check_singleton_cover(&constant, 1).unwrap();
        assert!(!r.holds);
        assert_eq!(r.lhs, 3);
        assert_eq!(r.witness, Some(vec![0]));
        assert!(check_singleton_cover(&constant, 4).is_err());
    }

    #[test]
    fn column_bound_boundary() {
        let a = HashFamily::new(vec![vec![0, 1, 2, 0]], vec![3]).unwrap();
        let r = check_column_bound(&a, 3).unwrap();
        assert!(!r.holds);
        let b = HashFamily::new(vec![vec![0, 1, 2]], vec![3]).unwrap();
        assert!(check_column_bound(&b, 2).unwrap().holds);
        assert!(matches!(
            check_column_bound(&b, 1),
            Err(Error::BoundNotApplicable(_))
        ));
    }

    #[test]
    fn niu_cao_examples() {
        assert!(check_niu_cao(10, 4, 4).holds);
        assert_eq!(check_niu_cao(10, 4, 4).rhs, 12);
        assert!(!check_niu_cao(13, 4, 4).holds);
        assert!(check_niu_cao(16, 4, 3).holds);
    }

    #[test]
    fn perfect_implication() {
        assert!(implies_perfect(4, 3));
        assert!(!implies_perfect(4, 2));
        assert!(!implies_perfect(3, 2));
    }

    #[test]
    fn singleton_fractal_test_is_only_sufficient() {
        let row = HashFamily::from_rows(vec![vec![0, 1, 2]]).unwrap();
        assert!(!is_fractal_by_singletons(&row));
    }
}
