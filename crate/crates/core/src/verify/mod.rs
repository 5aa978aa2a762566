//! Separation, distribution, perfection and fractality checks.
//!
//! A row separates a partition when columns in different classes carry
//! different symbols in that row. Exhaustive checks walk `t`-subsets in
//! lexicographic order and, within a subset, partitions as restricted-growth
//! strings in lexicographic order; the first failure in that order is the
//! reported witness, whatever the thread count.

mod bounds;
mod sampling;

pub use bounds::{
    check_column_bound, check_niu_cao, check_singleton_cover, implies_perfect,
    is_fractal_by_singletons, singleton_array, BoundCheckResult, SingletonArray,
};
pub use sampling::{sample_verify, sample_verify_fractal};

use log::warn;

use crate::combinatorics::{
    binomial, combination_rank, find_rgs, first_failing_subset, nontrivial_partition_count,
};
use crate::error::{Error, Result};
use crate::family::{HashFamily, Symbol};
use crate::partition::Partition;
use crate::report::{Mode, VerifyReport, Witness};

/// Largest enumeration the constructors and tests run exhaustively.
pub const EXHAUSTIVE_BUDGET: u128 = 10_000_000;

/// Does row `r` of `a` separate `partition`?
pub fn separates(a: &HashFamily, r: usize, partition: &Partition) -> Result<bool> {
    if r >= a.rows() {
        return Err(Error::RowOutOfRange {
            row: r,
            rows: a.rows(),
        });
    }
    check_support(a, partition)?;
    Ok(row_separates(a.row(r), partition))
}

/// Number of rows of `a` that separate `partition`.
pub fn count_separating_rows(a: &HashFamily, partition: &Partition) -> Result<usize> {
    check_support(a, partition)?;
    Ok(count_separating(a.row_iter(), partition))
}

/// Counts the rows among `rows` that separate `partition`.
pub fn count_separating<'a>(
    rows: impl IntoIterator<Item = &'a [Symbol]>,
    partition: &Partition,
) -> usize {
    rows.into_iter()
        .filter(|row| row_separates(row, partition))
        .count()
}

fn row_separates(row: &[Symbol], partition: &Partition) -> bool {
    let classes = partition.classes();
    classes.iter().enumerate().all(|(i, ci)| {
        classes[i + 1..]
            .iter()
            .all(|cj| ci.iter().all(|&x| cj.iter().all(|&y| row[x] != row[y])))
    })
}

fn check_support(a: &HashFamily, partition: &Partition) -> Result<()> {
    match partition.support().last() {
        Some(&col) if col >= a.cols() => Err(Error::ColumnOutOfRange {
            col,
            cols: a.cols(),
        }),
        _ => Ok(()),
    }
}

/// Number of rows whose symbols are pairwise distinct.
pub fn alpha_of(a: &HashFamily) -> usize {
    (0..a.rows()).filter(|&r| a.row_is_injective(r)).count()
}

/// `C(k, t)` times the number of partitions with 2..=p classes.
pub fn dhhf_enumeration_count(k: usize, t: usize, p: usize) -> u128 {
    binomial(k, t).saturating_mul(nontrivial_partition_count(t, p.min(t)))
}

/// Checks enumerated by [`verify_fractal`] on a `t`-row family with `k` columns.
pub fn fractal_enumeration_count(k: usize, t: usize, p: usize) -> u128 {
    (2..=t.min(k))
        .map(|l| binomial(k, l).saturating_mul(nontrivial_partition_count(l, p.min(l))))
        .fold(0u128, u128::saturating_add)
}

/// Validates `(t, p)` against `a`, clamping `p` to `t`.
pub(crate) fn strength_and_parts(a: &HashFamily, t: usize, p: usize) -> Result<(usize, usize)> {
    if t == 0 || p == 0 {
        return Err(Error::invalid("strength and part count must be at least 1"));
    }
    if a.cols() < t {
        return Err(Error::StrengthExceedsColumns { k: a.cols(), t });
    }
    if p > t {
        warn!("part count {p} exceeds strength {t}; clamping to {t}");
        return Ok((t, t));
    }
    Ok((t, p))
}

/// Per-subset view of every row: `labels[r][i]` is the position (within the
/// subset) of the first column sharing column `i`'s symbol in row `r`.
pub(crate) struct SubsetLabels {
    labels: Vec<Vec<u8>>,
}

impl SubsetLabels {
    pub(crate) fn new(rows: usize, t: usize) -> Self {
        Self {
            labels: vec![vec![0; t]; rows],
        }
    }

    pub(crate) fn load(&mut self, a: &HashFamily, subset: &[usize]) {
        for (r, lab) in self.labels.iter_mut().enumerate() {
            let row = a.row(r);
            for (i, &ci) in subset.iter().enumerate() {
                let s = row[ci];
                lab[i] = (0..i).find(|&j| row[subset[j]] == s).unwrap_or(i) as u8;
            }
        }
    }

    pub(crate) fn injective_rows(&self) -> usize {
        self.labels
            .iter()
            .filter(|lab| lab.iter().enumerate().all(|(i, &l)| l as usize == i))
            .count()
    }

    pub(crate) fn separating_rows(&self, rgs: &[u8]) -> usize {
        self.labels
            .iter()
            .filter(|lab| Self::separates(lab, rgs))
            .count()
    }

    pub(crate) fn any_separates(&self, rgs: &[u8]) -> bool {
        self.labels.iter().any(|lab| Self::separates(lab, rgs))
    }

    fn separates(lab: &[u8], rgs: &[u8]) -> bool {
        lab.iter().zip(rgs).all(|(&l, &b)| rgs[l as usize] == b)
    }
}

/// Exhaustive check that every partition of every `t`-set of columns into at
/// most `p` classes is separated by some row.
pub fn verify_dhhf(a: &HashFamily, t: usize, p: usize) -> Result<VerifyReport> {
    let (t, p) = strength_and_parts(a, t, p)?;
    let k = a.cols();
    let per_subset = nontrivial_partition_count(t, p);
    if per_subset == 0 {
        return Ok(VerifyReport::pass(0, Mode::Exhaustive));
    }
    let hit = first_failing_subset(
        k,
        t,
        || SubsetLabels::new(a.rows(), t),
        |subset, labels| {
            labels.load(a, subset);
            if labels.injective_rows() > 0 {
                return None;
            }
            find_rgs(t, p, |idx, rgs| {
                (!labels.any_separates(rgs)).then(|| (idx, rgs.to_vec()))
            })
        },
    );
    Ok(match hit {
        None => VerifyReport::pass(binomial(k, t) * per_subset, Mode::Exhaustive),
        Some((subset, (idx, rgs))) => {
            let checks = combination_rank(&subset, k) * per_subset + idx as u128 + 1;
            let witness = Partition::from_rgs(&subset, &rgs, p);
            VerifyReport::fail(Witness::Partition(witness), checks, Mode::Exhaustive)
        }
    })
}

/// Perfect hash family check: every `t` columns are pairwise distinct in
/// some row.
pub fn verify_phf(a: &HashFamily, t: usize) -> Result<VerifyReport> {
    verify_dhhf(a, t, t)
}

/// Exhaustive fractality check for a `t`-row family: for `2 <= l <= t`,
/// every partition of `l` columns into at most `min(p, l)` classes is
/// separated by at least `t + 1 - l` rows.
pub fn verify_fractal(a: &HashFamily, t: usize, p: usize) -> Result<VerifyReport> {
    if a.rows() != t {
        return Err(Error::invalid(format!(
            "fractal check needs rows == strength, got {} rows for strength {t}",
            a.rows()
        )));
    }
    let (_, p) = strength_and_parts(a, t, p)?;
    Ok(fractal_report(a, p))
}

/// Fractality of `a` taken at strength `a.rows()`, over column sets of size up
/// to `min(rows, cols)`. Used to validate ingredients with fewer columns
/// than rows.
pub(crate) fn fractal_report(a: &HashFamily, p: usize) -> VerifyReport {
    let t = a.rows();
    let k = a.cols();
    let mut checks = 0u128;
    for l in 2..=t.min(k) {
        let need = t + 1 - l;
        let q = p.min(l);
        let per_subset = nontrivial_partition_count(l, q);
        let hit = first_failing_subset(
            k,
            l,
            || SubsetLabels::new(t, l),
            |subset, labels| {
                labels.load(a, subset);
                if labels.injective_rows() >= need {
                    return None;
                }
                find_rgs(l, q, |idx, rgs| {
                    (labels.separating_rows(rgs) < need).then(|| (idx, rgs.to_vec()))
                })
            },
        );
        match hit {
            None => checks += binomial(k, l) * per_subset,
            Some((subset, (idx, rgs))) => {
                checks += combination_rank(&subset, k) * per_subset + idx as u128 + 1;
                let witness = Partition::from_rgs(&subset, &rgs, q);
                return VerifyReport::fail(Witness::Partition(witness), checks, Mode::Exhaustive);
            }
        }
    }
    VerifyReport::pass(checks, Mode::Exhaustive)
}
