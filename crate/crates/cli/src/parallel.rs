//! Threaded enumeration. The group is cut into blocks by the first value of
//! the underlying permutation and the per-block histograms are added, so the
//! result does not depend on the thread count.

use std::num::NonZeroUsize;
use std::thread;

use colmahon_core::oracle::{self, partial_counts, Distribution, OracleError};
use colmahon_core::{ClassKind, StatisticKind};

/// Thread count to use when none is given.
pub fn default_threads() -> usize {
    thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// Dense counts over the whole group, computed with up to `threads` workers.
pub fn counts(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    threads: usize,
) -> Vec<u64> {
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 || n <= 1 {
        return partial_counts(n, c, class, statistic, None);
    }
    let len = statistic.max_value(n, c) as usize + 1;
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let mut acc = vec![0u64; len];
                    for first in (1..=n).skip(t).step_by(threads) {
                        let block = partial_counts(n, c, class, statistic, Some(first));
                        for (a, b) in acc.iter_mut().zip(block) {
                            *a += b;
                        }
                    }
                    acc
                })
            })
            .collect();
        let mut total = vec![0u64; len];
        for worker in workers {
            for (a, b) in total
                .iter_mut()
                .zip(worker.join().expect("worker panicked"))
            {
                *a += b;
            }
        }
        total
    })
}

/// Same as [`oracle::distribution`], spread over threads.
pub fn distribution(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    cap: u64,
    threads: usize,
) -> Result<Distribution, OracleError> {
    // Cap check only; the empty iterator is dropped.
    oracle::enumerate_group(n, c, cap)?;
    let counts = counts(n, c, class, statistic, threads);
    Ok(Distribution::from_counts(n, c, class, statistic, &counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_matter() {
        for statistic in StatisticKind::ALL {
            for class in ClassKind::ALL {
                let one = distribution(5, 2, class, statistic, 10_000, 1).unwrap();
                for threads in [2, 3, 8] {
                    assert_eq!(
                        distribution(5, 2, class, statistic, 10_000, threads).unwrap(),
                        one
                    );
                }
                assert_eq!(
                    oracle::distribution(5, 2, class, statistic, 10_000).unwrap(),
                    one
                );
            }
        }
    }
}
