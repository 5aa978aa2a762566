//! `(n, m, d)`-coverings: `n` subsets of `{0..m-1}` such that every `d`-subset
//! lies inside at least one of them.

use std::fmt::Write as _;

use crate::combinatorics::{binomial, first_combination, next_combination};
use crate::error::{Error, Result};
use crate::text::{content_lines, parse_header, parse_numbers};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    n: usize,
    m: usize,
    d: usize,
    sets: Vec<Vec<usize>>,
    type_vector: Vec<usize>,
}

impl Covering {
    /// Validates the sets and records the type vector.
    pub fn new(sets: Vec<Vec<usize>>, m: usize, d: usize) -> Result<Self> {
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let n = sets.len();
        let type_vector = verify_covering(&sets, n, m, d)?;
        Ok(Self {
            n,
            m,
            d,
            sets,
            type_vector,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, r: usize) -> &[usize] {
        &self.sets[r]
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.sets[r].binary_search(&c).is_ok()
    }

    /// `rho[c]` is the number of sets containing `c`.
    pub fn type_vector(&self) -> &[usize] {
        &self.type_vector
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("COV {} {} {}\n", self.n, self.m, self.d);
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", items.join(" "));
        }
        out
    }

    /// `COV n m d` followed by exactly `n` lines; an empty line is an empty set.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (hl, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::parse(1, "empty input"))?;
        let dims = parse_header(hl, header, "COV", 3)?;
        let (n, m, d) = (dims[0], dims[1], dims[2]);
        let mut sets = Vec::with_capacity(n);
        for (ln, l) in lines {
            if sets.len() == n {
                if l.is_empty() {
                    continue;
                }
                return Err(Error::parse(ln, format!("more than {n} sets")));
            }
            let items = parse_numbers(ln, l)?;
            sets.push(items.into_iter().map(|x| x as usize).collect());
        }
        while sets.len() < n {
            // trailing empty sets may lose their newline
            if text.ends_with('\n') && sets.len() + 1 == n {
                sets.push(Vec::new());
            } else {
                return Err(Error::parse(
                    0,
                    format!("expected {n} sets, found {}", sets.len()),
                ));
            }
        }
        Self::new(sets, m, d)
    }
}

/// Checks that `sets` is an `(n, m, d)`-covering and returns its type vector.
/// The error names the lexicographically first uncovered `d`-subset.
pub fn verify_covering(sets: &[Vec<usize>], n: usize, m: usize, d: usize) -> Result<Vec<usize>> {
    if sets.len() != n {
        return Err(Error::invalid(format!(
            "expected {n} sets, got {}",
            sets.len()
        )));
    }
    if d == 0 || d > m {
        return Err(Error::invalid(format!(
            "need 1 <= d <= m, got d={d}, m={m}"
        )));
    }
    let mut member = vec![vec![false; m]; n];
    for (r, s) in sets.iter().enumerate() {
        for &c in s {
            if c >= m {
                return Err(Error::invalid(format!(
                    "set {r} contains {c}, outside 0..{m}"
                )));
            }
            member[r][c] = true;
        }
    }
    let mut combo = first_combination(d);
    loop {
        if !member.iter().any(|row| combo.iter().all(|&c| row[c])) {
            return Err(Error::UncoveredSubset(combo));
        }
        if !next_combination(&mut combo, m, 0) {
            break;
        }
    }
    Ok((0..m)
        .map(|c| member.iter().filter(|row| row[c]).count())
        .collect())
}

/// All `d`-subsets of `{0..m-1}`, in colex order.
pub fn all_d_subsets_covering(m: usize, d: usize) -> Result<Covering> {
    if d == 0 || d >= m {
        return Err(Error::invalid(format!("need 1 <= d < m, got d={d}, m={m}")));
    }
    let mut sets = Vec::with_capacity(binomial(m, d) as usize);
    let mut combo = first_combination(d);
    loop {
        sets.push(combo.clone());
        if !next_combination(&mut combo, m, 0) {
            break;
        }
    }
    sets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    Covering::new(sets, m, d)
}

/// `P_j = {j, j+1, j+3} mod n`. A `(n, n, 2)`-covering of type `(3, ..., 3)`
/// for `n` in {6, 7}; other `n` are accepted only if they verify.
pub fn cyclic_covering(n: usize) -> Result<Covering> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "cyclic covering needs n >= 4, got {n}"
        )));
    }
    let sets = (0..n).map(|j| vec![j, (j + 1) % n, (j + 3) % n]).collect();
    Covering::new(sets, n, 2)
}
