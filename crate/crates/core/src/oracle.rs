//! Independent ground truth: exhaustive enumeration of perfect matchings
//! for small populations, and a seeded uniform sampler for any size.
//!
//! Individuals are labeled `0 ..= 4n-1`; `0 ..= 2n-1` are men, the rest
//! women, so the sex test is a single index comparison. Enumeration pairs
//! the lowest unmatched individual with every remaining candidate, which
//! visits each perfect matching exactly once; same-sex pairs are counted
//! incrementally during the recursion.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::numbers::double_factorial_odd;
use crate::{Error, Int, Result};

/// Largest `n` enumerated without an explicit override; `(4n-1)!!` at
/// `n = 4` is 2,027,025 and the next step is roughly 654 million.
pub const ENUMERATION_GUARD_MAX: u32 = 4;

/// Name of the generator backing [`sample_matchings`]; recorded in
/// summaries so runs are replayable.
pub const SAMPLER_RNG: &str = "chacha12";

/// Exact counts from exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDistribution {
    pub n: u32,
    /// Count of perfect matchings by number of same-sex marriages; values
    /// absent from the map (all odd ones) are zero.
    pub counts: BTreeMap<u64, u64>,
    /// Sum of all counts, `(4n-1)!!`.
    pub total: Int,
}

impl MatchingDistribution {
    pub fn count(&self, j: u64) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }
}

/// Exhaustive enumeration, guarded to `n <= 4`.
pub fn enumerate_matchings(n: u32) -> Result<MatchingDistribution> {
    if n > ENUMERATION_GUARD_MAX {
        return Err(Error::EnumerationGuarded {
            n,
            matchings: double_factorial_odd(4 * n as u64 - 1)?.to_string(),
        });
    }
    enumerate_matchings_unguarded(n)
}

/// Exhaustive enumeration with no size guard. Feasible only a little past
/// the guard; refuses `n > 8` outright since `31!!` visits would never end.
pub fn enumerate_matchings_unguarded(n: u32) -> Result<MatchingDistribution> {
    if n < 1 {
        return Err(Error::InvalidInput("enumeration requires n >= 1".into()));
    }
    if n > 8 {
        return Err(Error::InvalidInput(format!(
            "enumeration of n = {n} is computationally infeasible"
        )));
    }
    let people = 4 * n;
    let men = 2 * n;
    let mut counts = vec![0u64; people as usize + 1];
    let full_mask: u64 = if people == 64 { !0 } else { (1u64 << people) - 1 };
    recurse(full_mask, 0, men, &mut counts);

    let mut total = Int::zero();
    let mut map = BTreeMap::new();
    for (j, &c) in counts.iter().enumerate() {
        if c > 0 {
            total += c;
            map.insert(j as u64, c);
        }
    }
    assert_eq!(
        total,
        double_factorial_odd(4 * n as u64 - 1)?,
        "enumeration must visit every perfect matching exactly once"
    );
    Ok(MatchingDistribution {
        n,
        counts: map,
        total,
    })
}

fn recurse(mask: u64, same: u32, men: u32, counts: &mut [u64]) {
    if mask == 0 {
        counts[same as usize] += 1;
        return;
    }
    let first = mask.trailing_zeros();
    let rest = mask & (mask - 1); // drop the lowest unmatched individual
    let mut candidates = rest;
    while candidates != 0 {
        let mate = candidates.trailing_zeros();
        candidates &= candidates - 1;
        let same_sex = (first < men) == (mate < men);
        recurse(rest & !(1u64 << mate), same + same_sex as u32, men, counts);
    }
}

/// Summary of a Monte Carlo run. Exactness is deliberately abandoned here:
/// empirical moments are plain `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSummary {
    pub n: u32,
    pub trials: u64,
    pub seed: u64,
    pub workers: u32,
    pub rng: &'static str,
    pub empirical_counts: BTreeMap<u64, u64>,
    /// Empirical `m_1 ..= m_4`.
    pub empirical_moments: [f64; 4],
}

impl SampleSummary {
    pub fn frequency(&self, j: u64) -> f64 {
        *self.empirical_counts.get(&j).unwrap_or(&0) as f64 / self.trials as f64
    }
}

/// Draws `trials` uniform perfect matchings on one worker.
pub fn sample_matchings(n: u32, trials: u64, seed: u64) -> Result<SampleSummary> {
    sample_matchings_parallel(n, trials, seed, 1)
}

/// Parallel sampling: trials are split across `workers`, each with an
/// independent stream of the same seeded generator, and the counts merge
/// deterministically. Results are byte-identical for a fixed
/// `(seed, workers)` pair.
pub fn sample_matchings_parallel(
    n: u32,
    trials: u64,
    seed: u64,
    workers: u32,
) -> Result<SampleSummary> {
    if n < 1 || trials < 1 || workers < 1 {
        return Err(Error::InvalidInput(
            "sampling requires n >= 1, trials >= 1, workers >= 1".into(),
        ));
    }
    let workers = workers.min(trials.min(u32::MAX as u64) as u32);
    let shares: Vec<u64> = (0..workers as u64)
        .map(|w| trials / workers as u64 + u64::from(w < trials % workers as u64))
        .collect();

    let counts = std::thread::scope(|scope| {
        let handles: Vec<_> = shares
            .iter()
            .enumerate()
            .map(|(w, &share)| {
                scope.spawn(move || {
                    let mut rng = ChaCha12Rng::seed_from_u64(seed);
                    rng.set_stream(w as u64);
                    sample_worker(n, share, &mut rng)
                })
            })
            .collect();
        let mut merged = BTreeMap::new();
        for handle in handles {
            for (j, c) in handle.join().expect("sampler worker panicked") {
                *merged.entry(j).or_insert(0) += c;
            }
        }
        merged
    });

    let mut moments = [0.0f64; 4];
    for (&j, &c) in &counts {
        let mut power = 1.0;
        for m in &mut moments {
            power *= j as f64;
            *m += power * c as f64;
        }
    }
    for m in &mut moments {
        *m /= trials as f64;
    }

    Ok(SampleSummary {
        n,
        trials,
        seed,
        workers,
        rng: SAMPLER_RNG,
        empirical_counts: counts,
        empirical_moments: moments,
    })
}

/// One worker: repeatedly pair the first unmatched individual with a
/// uniformly random other unmatched individual. Any fixed rule for the
/// distinguished element yields the uniform distribution over perfect
/// matchings.
fn sample_worker(n: u32, trials: u64, rng: &mut ChaCha12Rng) -> BTreeMap<u64, u64> {
    let men = 2 * n;
    let mut counts = BTreeMap::new();
    let mut pool: Vec<u32> = Vec::with_capacity(4 * n as usize);
    for _ in 0..trials {
        pool.clear();
        pool.extend(0..4 * n);
        let mut same = 0u64;
        while !pool.is_empty() {
            let mate_index = rng.gen_range(1..pool.len());
            let first = pool[0];
            let mate = pool[mate_index];
            same += u64::from((first < men) == (mate < men));
            pool.swap_remove(mate_index);
            pool.swap_remove(0);
        }
        *counts.entry(same).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgf::{build_pgf, mean_formula};
    use crate::Rat;
    use num_traits::ToPrimitive;

    #[test]
    fn three_matchings_of_the_smallest_population() {
        let dist = enumerate_matchings(1).unwrap();
        assert_eq!(dist.count(0), 2);
        assert_eq!(dist.count(1), 0);
        assert_eq!(dist.count(2), 1);
        assert_eq!(dist.total, Int::from(3));
    }

    #[test]
    fn n_two_counts() {
        let dist = enumerate_matchings(2).unwrap();
        assert_eq!(dist.count(0), 24);
        assert_eq!(dist.count(2), 72);
        assert_eq!(dist.count(4), 9);
        assert_eq!(dist.total, Int::from(105));
    }

    #[test]
    fn n_three_counts() {
        let dist = enumerate_matchings(3).unwrap();
        assert_eq!(dist.count(0), 720);
        assert_eq!(dist.count(2), 5400);
        assert_eq!(dist.count(4), 4050);
        assert_eq!(dist.count(6), 225);
        assert_eq!(dist.total, Int::from(10395));
    }

    #[test]
    fn enumeration_matches_the_generating_function() {
        for n in 1..=3u32 {
            let dist = enumerate_matchings(n).unwrap();
            let pgf = build_pgf(n).unwrap();
            for j in 0..=2 * n as usize {
                let expected = Rat::new(Int::from(dist.count(j as u64)), dist.total.clone());
                assert_eq!(pgf.probability(j), expected, "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn guard_refuses_large_populations() {
        match enumerate_matchings(5) {
            Err(Error::EnumerationGuarded { n: 5, matchings }) => {
                assert_eq!(matchings, "654729075");
            }
            other => panic!("expected guard refusal, got {other:?}"),
        }
        assert!(enumerate_matchings_unguarded(9).is_err());
        assert!(enumerate_matchings_unguarded(0).is_err());
    }

    #[test]
    fn sampling_is_deterministic_per_seed_and_worker_count() {
        let a = sample_matchings(3, 2000, 99).unwrap();
        let b = sample_matchings(3, 2000, 99).unwrap();
        assert_eq!(a, b);
        let c = sample_matchings_parallel(3, 2000, 99, 4).unwrap();
        let d = sample_matchings_parallel(3, 2000, 99, 4).unwrap();
        assert_eq!(c, d);
        // different seeds genuinely move the counts
        let e = sample_matchings(3, 2000, 100).unwrap();
        assert_ne!(a.empirical_counts, e.empirical_counts);
    }

    #[test]
    fn sampler_tracks_the_exact_distribution_at_n_one() {
        let summary = sample_matchings(1, 100_000, 7).unwrap();
        // exact probability of j = 2 is 1/3; 5 standard errors is ~0.0075
        let freq = summary.frequency(2);
        assert!((freq - 1.0 / 3.0).abs() < 0.0075, "freq = {freq}");
        assert_eq!(summary.frequency(0) + summary.frequency(2), 1.0);
    }

    #[test]
    fn sampler_mean_approaches_the_closed_form() {
        let trials = 20_000u64;
        let summary = sample_matchings_parallel(10, trials, 4242, 4).unwrap();
        let mean = mean_formula(10).unwrap().to_f64().unwrap();
        // generous CLT-scale bound
        assert!((summary.empirical_moments[0] - mean).abs() < 0.3);
    }
}
