//! Brute-force reference checks, written independently of the library's
//! enumeration code: every t-subset by recursion, every labelling of it by
//! `0..p` (so every partition appears, many times over).
#![allow(dead_code)]

use hashfam::HashFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn subsets(k: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for c in start..k {
            cur.push(c);
            go(c + 1, k, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, t, &mut Vec::new(), &mut out);
    out
}

fn labellings(t: usize, p: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = p.pow(t as u32);
    (0..total).map(move |mut x| {
        let mut lab = vec![0; t];
        for l in lab.iter_mut() {
            *l = x % p;
            x /= p;
        }
        lab
    })
}

/// Number of rows where columns with different labels get different symbols.
pub fn separating_rows(a: &HashFamily, cols: &[usize], lab: &[usize]) -> usize {
    (0..a.rows())
        .filter(|&r| {
            (0..cols.len()).all(|i| {
                (0..i).all(|j| lab[i] == lab[j] || a.symbol(r, cols[i]) != a.symbol(r, cols[j]))
            })
        })
        .count()
}

pub fn naive_dhhf(a: &HashFamily, t: usize, p: usize) -> bool {
    subsets(a.cols(), t)
        .iter()
        .all(|cols| labellings(t, p).all(|lab| separating_rows(a, cols, &lab) >= 1))
}

pub fn naive_fractal(a: &HashFamily, p: usize) -> bool {
    let t = a.rows();
    (2..=t.min(a.cols())).all(|l| {
        subsets(a.cols(), l).iter().all(|cols| {
            labellings(l, p.min(l)).all(|lab| {
                let classes = {
                    let mut s = lab.clone();
                    s.sort_unstable();
                    s.dedup();
                    s.len()
                };
                classes < 2 || separating_rows(a, cols, &lab) >= t + 1 - l
            })
        })
    })
}

/// Every t columns show every one of the v^t tuples.
pub fn naive_ca(rows: &[Vec<u32>], v: usize, t: usize) -> bool {
    let k = rows[0].len();
    subsets(k, t).iter().all(|cols| {
        let mut seen = vec![false; v.pow(t as u32)];
        for row in rows {
            let idx = cols.iter().fold(0, |acc, &c| acc * v + row[c] as usize);
            seen[idx] = true;
        }
        seen.iter().all(|&s| s)
    })
}

pub fn random_family(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max_w: u32) -> HashFamily {
    let data: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..max_w)).collect())
        .collect();
    HashFamily::new(data, vec![max_w as usize; rows]).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
