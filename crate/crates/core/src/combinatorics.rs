//! Subset and set-partition enumeration shared by the verifiers.
//!
//! Subsets are enumerated in lexicographic order. Partitions of a sorted
//! subset are restricted-growth strings (RGS): `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`, enumerated in lexicographic order.

use rand::Rng;
use rayon::prelude::*;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// Number of partitions of a `t`-set into between 2 and `p` nonempty classes.
/// Single-class partitions are always separated and never enumerated.
pub fn nontrivial_partition_count(t: usize, p: usize) -> u128 {
    (2..=p.min(t)).map(|b| stirling2(t, b)).sum()
}

/// First `t`-subset of `0..k` in lexicographic order.
pub fn first_combination(t: usize) -> Vec<usize> {
    (0..t).collect()
}

/// Advances `combo` to its lexicographic successor among `t`-subsets of
/// `0..k`, leaving positions before `fixed` untouched.
pub fn next_combination(combo: &mut [usize], k: usize, fixed: usize) -> bool {
    let t = combo.len();
    let mut i = t;
    while i > fixed {
        i -= 1;
        if combo[i] < k - t + i {
            combo[i] += 1;
            for j in i + 1..t {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Number of `t`-subsets of `0..k` lexicographically before `combo`.
pub fn combination_rank(combo: &[usize], k: usize) -> u128 {
    let t = combo.len();
    let mut rank = 0u128;
    let mut start = 0;
    for (i, &c) in combo.iter().enumerate() {
        for j in start..c {
            rank += binomial(k - 1 - j, t - 1 - i);
        }
        start = c + 1;
    }
    rank
}

/// Lexicographically next RGS using at most `max_blocks` blocks.
pub fn next_rgs(a: &mut [u8], max_blocks: usize) -> bool {
    let t = a.len();
    if t == 0 {
        return false;
    }
    let mut prefix_max = vec![0u8; t];
    for i in 1..t {
        prefix_max[i] = prefix_max[i - 1].max(a[i - 1]);
    }
    let cap = max_blocks.saturating_sub(1).min(u8::MAX as usize) as u8;
    for i in (1..t).rev() {
        if a[i] <= prefix_max[i] && a[i] < cap {
            a[i] += 1;
            a[i + 1..].iter_mut().for_each(|x| *x = 0);
            return true;
        }
    }
    false
}

/// Visits every RGS of length `t` with 2..=`max_blocks` blocks in lexicographic
/// order; stops early when `visit` returns `Some`. The index passed is 0-based.
pub fn find_rgs<X>(
    t: usize,
    max_blocks: usize,
    mut visit: impl FnMut(usize, &[u8]) -> Option<X>,
) -> Option<X> {
    if t < 2 || max_blocks < 2 {
        return None;
    }
    let mut a = vec![0u8; t];
    let mut index = 0;
    while next_rgs(&mut a, max_blocks) {
        if let Some(x) = visit(index, &a) {
            return Some(x);
        }
        index += 1;
    }
    None
}

/// Draws restricted-growth strings uniformly among those of length `t` with
/// at most `max_blocks` blocks.
#[derive(Debug, Clone)]
pub struct RgsSampler {
    t: usize,
    max_blocks: usize,
    // completions[i][m]: ways to fill positions i.. given m blocks already open
    completions: Vec<Vec<u128>>,
}

impl RgsSampler {
    pub fn new(t: usize, max_blocks: usize) -> Self {
        let p = max_blocks.max(1);
        let mut completions = vec![vec![0u128; p + 2]; t + 1];
        for m in 0..=p {
            completions[t][m] = 1;
        }
        for i in (0..t).rev() {
            for m in 0..=p {
                let reuse = (m as u128).saturating_mul(completions[i + 1][m]);
                let open = if m < p { completions[i + 1][m + 1] } else { 0 };
                completions[i][m] = reuse.saturating_add(open);
            }
        }
        Self {
            t,
            max_blocks: p,
            completions,
        }
    }

    /// Total number of strings the sampler draws from.
    pub fn total(&self) -> u128 {
        if self.t == 0 {
            1
        } else {
            self.completions[1][1]
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [u8]) {
        debug_assert_eq!(out.len(), self.t);
        if self.t == 0 {
            return;
        }
        out[0] = 0;
        let mut open = 1usize;
        for i in 1..self.t {
            let each = self.completions[i + 1][open];
            let total = self.completions[i][open];
            let draw = rng.gen_range(0..total);
            let reuse_total = open as u128 * each;
            if draw < reuse_total {
                out[i] = (draw / each) as u8;
            } else {
                debug_assert!(open < self.max_blocks);
                out[i] = open as u8;
                open += 1;
            }
        }
    }
}

/// Scans the `t`-subsets of `0..k` in lexicographic order (in parallel) and
/// returns the lexicographically first subset for which `probe` reports a
/// failure. The result does not depend on scheduling: each prefix block is
/// scanned in order and the earliest failing block wins.
pub fn first_failing_subset<S, X, I, P>(
    k: usize,
    t: usize,
    init: I,
    probe: P,
) -> Option<(Vec<usize>, X)>
where
    X: Send,
    I: Fn() -> S + Sync,
    P: Fn(&[usize], &mut S) -> Option<X> + Sync,
{
    if t == 0 || t > k {
        return None;
    }
    let fixed = t.min(2);
    let mut prefixes = Vec::new();
    let mut prefix = first_combination(fixed);
    // prefixes range over `fixed`-subsets that can still be completed
    let limit = k - (t - fixed);
    loop {
        prefixes.push(prefix.clone());
        if !next_combination(&mut prefix, limit, 0) {
            break;
        }
    }
    prefixes.par_iter().find_map_first(|pre| {
        let mut scratch = init();
        let mut combo = pre.clone();
        let last = *pre.last().expect("non-empty prefix");
        combo.extend((1..=t - fixed).map(|j| last + j));
        loop {
            if let Some(x) = probe(&combo, &mut scratch) {
                return Some((combo, x));
            }
            if !next_combination(&mut combo, k, fixed) {
                return None;
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 4), 210);
        assert_eq!(binomial(12, 4), 495);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(5, 3), 25);
        // Bell(4) - 1 = 14
        assert_eq!(nontrivial_partition_count(4, 4), 14);
        assert_eq!(nontrivial_partition_count(4, 2), 7);
        assert_eq!(nontrivial_partition_count(3, 1), 0);
    }

    #[test]
    fn rgs_enumeration_matches_count() {
        for t in 1..=7 {
            for p in 1..=t + 1 {
                let mut seen = Vec::new();
                find_rgs::<()>(t, p, |_, a| {
                    seen.push(a.to_vec());
                    None
                });
                assert_eq!(seen.len() as u128, nontrivial_partition_count(t, p));
                assert!(seen.windows(2).all(|w| w[0] < w[1]), "lex order");
                for a in &seen {
                    let blocks = *a.iter().max().unwrap() as usize + 1;
                    assert!((2..=p).contains(&blocks));
                }
            }
        }
    }

    #[test]
    fn rgs_order_for_three() {
        let mut seen = Vec::new();
        find_rgs::<()>(3, 3, |_, a| {
            seen.push(a.to_vec());
            None
        });
        assert_eq!(
            seen,
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn combination_ranks_follow_enumeration() {
        let (k, t) = (7, 3);
        let mut combo = first_combination(t);
        let mut expected = 0u128;
        loop {
            assert_eq!(combination_rank(&combo, k), expected);
            expected += 1;
            if !next_combination(&mut combo, k, 0) {
                break;
            }
        }
        assert_eq!(expected, binomial(k, t));
    }

    #[test]
    fn parallel_scan_finds_lex_first() {
        // fail on any subset containing both 3 and 5
        let hit = first_failing_subset(
            9,
            4,
            || (),
            |s, _| (s.contains(&3) && s.contains(&5)).then_some(()),
        );
        assert_eq!(hit.unwrap().0, vec![0, 1, 3, 5]);
        let none = first_failing_subset(6, 6, || (), |_, _| None::<()>);
        assert!(none.is_none());
    }

    #[test]
    fn sampler_is_uniform_enough() {
        let sampler = RgsSampler::new(4, 2);
        assert_eq!(sampler.total(), 8);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts = std::collections::HashMap::new();
        let mut buf = [0u8; 4];
        for _ in 0..8000 {
            sampler.sample(&mut rng, &mut buf);
            *counts.entry(buf).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 8);
        assert!(counts.values().all(|&c| (800..1200).contains(&c)));
    }
}
