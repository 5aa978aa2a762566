//! Seeded one-row-at-a-time greedy covering array generator. No optimality
//! claim; meant for small ingredient arrays.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CoveringArray;
use crate::combinatorics::{binomial, combination_rank, first_combination, next_combination};
use crate::error::{Error, Result};
use crate::family::Symbol;

const CANDIDATES: usize = 8;

struct Coverage {
    k: usize,
    t: usize,
    v: usize,
    per_subset: usize,
    covered: Vec<bool>,
    missing: usize,
}

impl Coverage {
    fn tuple_index(&self, subset: &[usize], row: &[Symbol]) -> usize {
        subset
            .iter()
            .fold(0, |acc, &c| acc * self.v + row[c] as usize)
    }

    fn slot(&self, subset: &[usize], row: &[Symbol]) -> usize {
        combination_rank(subset, self.k) as usize * self.per_subset + self.tuple_index(subset, row)
    }

    /// Number of uncovered pairs the full row would cover.
    fn gain(&self, row: &[Symbol]) -> usize {
        let mut combo = first_combination(self.t);
        let mut gain = 0;
        loop {
            if !self.covered[self.slot(&combo, row)] {
                gain += 1;
            }
            if !next_combination(&mut combo, self.k, 0) {
                return gain;
            }
        }
    }

    fn add(&mut self, row: &[Symbol]) {
        let mut combo = first_combination(self.t);
        loop {
            let s = self.slot(&combo, row);
            if !std::mem::replace(&mut self.covered[s], true) {
                self.missing -= 1;
            }
            if !next_combination(&mut combo, self.k, 0) {
                return;
            }
        }
    }

    /// Gain from setting column `col` to `s`, counting only column sets
    /// inside `fixed + {col}` that contain `col`.
    fn column_gain(&self, row: &mut [Symbol], fixed: &[usize], col: usize, s: Symbol) -> usize {
        if fixed.len() + 1 < self.t {
            return 0;
        }
        row[col] = s;
        let mut pick = first_combination(self.t - 1);
        let mut subset = vec![0; self.t];
        let mut gain = 0;
        loop {
            for (dst, &i) in subset.iter_mut().zip(&pick) {
                *dst = fixed[i];
            }
            subset[self.t - 1] = col;
            subset.sort_unstable();
            if !self.covered[self.slot(&subset, row)] {
                gain += 1;
            }
            if !next_combination(&mut pick, fixed.len(), 0) {
                return gain;
            }
        }
    }

    fn first_missing(&self) -> Option<(Vec<usize>, Vec<Symbol>)> {
        let pos = self.covered.iter().position(|&c| !c)?;
        let (rank, mut idx) = (pos / self.per_subset, pos % self.per_subset);
        let mut combo = first_combination(self.t);
        for _ in 0..rank {
            next_combination(&mut combo, self.k, 0);
        }
        let mut tuple = vec![0; self.t];
        for slot in tuple.iter_mut().rev() {
            *slot = (idx % self.v) as Symbol;
            idx /= self.v;
        }
        Some((combo, tuple))
    }
}

/// CA(N; t, k, v) built greedily: each row starts from the first uncovered
/// (column set, tuple) pair and fills the remaining columns one at a time,
/// in a seeded random order, with the symbol covering the most new pairs.
/// The best of a few candidate rows is kept.
pub fn greedy_ca(t: usize, k: usize, v: usize, seed: u64) -> Result<CoveringArray> {
    if t == 0 || v == 0 {
        return Err(Error::invalid("greedy_ca needs t, v >= 1"));
    }
    if k < t {
        return Err(Error::StrengthExceedsColumns { k, t });
    }
    let per_subset = super::tuple_count(v, t)? as usize;
    let total = binomial(k, t) as usize * per_subset;
    if total > 1 << 28 {
        return Err(Error::invalid("greedy_ca instance too large"));
    }
    let mut cov = Coverage {
        k,
        t,
        v,
        per_subset,
        covered: vec![false; total],
        missing: total,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    while let Some((seed_cols, seed_tuple)) = cov.first_missing() {
        let mut best: Option<(usize, Vec<Symbol>)> = None;
        for _ in 0..CANDIDATES {
            let mut row = vec![0 as Symbol; k];
            for (&c, &s) in seed_cols.iter().zip(&seed_tuple) {
                row[c] = s;
            }
            let mut fixed = seed_cols.clone();
            let mut free: Vec<usize> = (0..k).filter(|c| !seed_cols.contains(c)).collect();
            free.shuffle(&mut rng);
            for col in free {
                let offset = rng.gen_range(0..v);
                let mut choice = (0, offset as Symbol);
                for j in 0..v {
                    let s = ((offset + j) % v) as Symbol;
                    let g = cov.column_gain(&mut row, &fixed, col, s);
                    if g > choice.0 {
                        choice = (g, s);
                    }
                }
                row[col] = choice.1;
                fixed.push(col);
            }
            let g = cov.gain(&row);
            if best.as_ref().is_none_or(|(bg, _)| g > *bg) {
                best = Some((g, row));
            }
        }
        let (_, row) = best.expect("at least one candidate");
        cov.add(&row);
        rows.push(row);
    }
    debug_assert_eq!(cov.missing, 0);
    CoveringArray::new(rows, v, t)
}
