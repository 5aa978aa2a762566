//! Seeded randomized verification for families too large to enumerate.
//!
//! Samples are drawn in fixed-size chunks; chunk `i` uses a ChaCha8 stream
//! seeded with `seed` on stream `i`. The chunking is independent of the thread
//! pool, so a given `(family, t, p, samples, seed)` always yields the same
//! report. Each sample is a uniform `t`-subset (partial Fisher-Yates shuffle)
//! and a uniform restricted-growth string with 2..=p blocks (uniform over at
//! most `p` blocks, redrawing the single-class string).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{strength_and_parts, SubsetLabels};
use crate::combinatorics::RgsSampler;
use crate::error::{Error, Result};
use crate::family::HashFamily;
use crate::partition::Partition;
use crate::report::{Mode, VerifyReport, Witness};

const CHUNK: u64 = 4096;

struct Scratch {
    perm: Vec<usize>,
    swaps: Vec<usize>,
    subset: Vec<usize>,
    rgs: Vec<u8>,
}

impl Scratch {
    fn new(k: usize, t: usize) -> Self {
        Self {
            perm: (0..k).collect(),
            swaps: Vec::with_capacity(t),
            subset: Vec::with_capacity(t),
            rgs: vec![0; t],
        }
    }

    /// Uniform sorted `l`-subset; the permutation is restored afterwards.
    fn draw_subset(&mut self, rng: &mut ChaCha8Rng, l: usize) {
        let k = self.perm.len();
        self.swaps.clear();
        for i in 0..l {
            let j = rng.gen_range(i..k);
            self.perm.swap(i, j);
            self.swaps.push(j);
        }
        self.subset.clear();
        self.subset.extend_from_slice(&self.perm[..l]);
        self.subset.sort_unstable();
        for (i, &j) in self.swaps.iter().enumerate().rev() {
            self.perm.swap(i, j);
        }
    }

    fn draw_rgs(&mut self, rng: &mut ChaCha8Rng, sampler: &RgsSampler, l: usize) {
        let rgs = &mut self.rgs[..l];
        loop {
            sampler.sample(rng, rgs);
            if rgs.iter().any(|&b| b != 0) {
                return;
            }
        }
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn run_chunks<F>(samples: u64, probe: F) -> Option<(u64, Partition)>
where
    F: Fn(u64, u64) -> Option<(u64, Partition)> + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    (0..chunks).into_par_iter().find_map_first(|chunk| {
        let start = chunk * CHUNK;
        let len = CHUNK.min(samples - start);
        probe(chunk, len).map(|(offset, p)| (start + offset, p))
    })
}

/// Randomized distributing check: `samples` random (t-set, partition) pairs,
/// each required to be separated by some row. A pass is probabilistic
/// evidence only.
pub fn sample_verify(
    a: &HashFamily,
    t: usize,
    p: usize,
    samples: u64,
    seed: u64,
) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::invalid("sample count must be at least 1"));
    }
    let (t, p) = strength_and_parts(a, t, p)?;
    let mode = Mode::Sampled { seed, samples };
    if t < 2 || p < 2 {
        return Ok(VerifyReport::pass(0, mode));
    }
    let sampler = RgsSampler::new(t, p);
    let hit = run_chunks(samples, |chunk, len| {
        let mut rng = chunk_rng(seed, chunk);
        let mut scratch = Scratch::new(a.cols(), t);
        let mut labels = SubsetLabels::new(a.rows(), t);
        for i in 0..len {
            scratch.draw_subset(&mut rng, t);
            scratch.draw_rgs(&mut rng, &sampler, t);
            labels.load(a, &scratch.subset);
            if !labels.any_separates(&scratch.rgs) {
                return Some((i, Partition::from_rgs(&scratch.subset, &scratch.rgs, p)));
            }
        }
        None
    });
    Ok(match hit {
        None => VerifyReport::pass(samples as u128, mode),
        Some((index, w)) => VerifyReport::fail(Witness::Partition(w), index as u128 + 1, mode),
    })
}

/// Randomized fractality check for a `t`-row family. Each sample picks a
/// column-set size `l` uniformly from `2..=min(t, k)`, then a random `l`-set
/// and partition into at most `min(p, l)` classes, and requires at least
/// `t + 1 - l` separating rows.
pub fn sample_verify_fractal(
    a: &HashFamily,
    t: usize,
    p: usize,
    samples: u64,
    seed: u64,
) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::invalid("sample count must be at least 1"));
    }
    if a.rows() != t {
        return Err(Error::invalid(format!(
            "fractal check needs rows == strength, got {} rows for strength {t}",
            a.rows()
        )));
    }
    let p = p.min(t).max(1);
    let mode = Mode::Sampled { seed, samples };
    let lmax = t.min(a.cols());
    if lmax < 2 || p < 2 {
        return Ok(VerifyReport::pass(0, mode));
    }
    let samplers: Vec<RgsSampler> = (0..=lmax).map(|l| RgsSampler::new(l, p.min(l))).collect();
    let hit = run_chunks(samples, |chunk, len| {
        let mut rng = chunk_rng(seed, chunk);
        let mut scratch = Scratch::new(a.cols(), lmax);
        let mut labels: Vec<SubsetLabels> = (0..=lmax).map(|l| SubsetLabels::new(t, l)).collect();
        for i in 0..len {
            let l = rng.gen_range(2..=lmax);
            let q = p.min(l);
            scratch.draw_subset(&mut rng, l);
            if q < 2 {
                continue;
            }
            scratch.draw_rgs(&mut rng, &samplers[l], l);
            let lab = &mut labels[l];
            lab.load(a, &scratch.subset);
            if lab.separating_rows(&scratch.rgs[..l]) < t + 1 - l {
                return Some((
                    i,
                    Partition::from_rgs(&scratch.subset, &scratch.rgs[..l], q),
                ));
            }
        }
        None
    });
    Ok(match hit {
        None => VerifyReport::pass(samples as u128, mode),
        Some((index, w)) => VerifyReport::fail(Witness::Partition(w), index as u128 + 1, mode),
    })
}
