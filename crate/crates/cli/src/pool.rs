//! Scoped worker threads for the labelling search and sampled list checks.
//!
//! Work is cut into tasks that do not depend on the worker count, and
//! partial results are combined in task order, so output is identical for
//! any number of workers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use fewlists_core::choosability::{random_list_range, RandomCheck};
use fewlists_core::nullstellensatz::search::{ExponentFamily, Executor, StarSearch, Tally};
use fewlists_core::Multigraph;

/// Search tree split depth.
pub const SPLIT_DEPTH: usize = 3;
/// Trials per sampling task.
pub const TRIAL_CHUNK: u64 = 64;

#[derive(Clone, Copy, Debug)]
pub struct Pool {
    pub workers: usize,
}

impl Pool {
    pub fn new(workers: usize) -> Self {
        Pool { workers: workers.max(1) }
    }

    /// Runs `task(i)` for `i in 0..count` on the workers; results by index.
    pub fn map<T: Send>(&self, count: usize, task: impl Fn(usize) -> T + Sync) -> Vec<T> {
        let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..count).map(|_| None).collect());
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..self.workers.min(count) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= count {
                        break;
                    }
                    let value = task(i);
                    slots.lock().expect("no worker panicked")[i] = Some(value);
                });
            }
        });
        slots.into_inner().expect("no worker panicked").into_iter().map(|v| v.expect("every task ran")).collect()
    }

    pub fn random_list_check(&self, g: &Multigraph, f: &[u8], trials: u64, seed: u64) -> RandomCheck {
        let tasks = trials.div_ceil(TRIAL_CHUNK) as usize;
        let parts = self.map(tasks, |i| {
            let start = i as u64 * TRIAL_CHUNK;
            random_list_range(g, f, seed, start..(start + TRIAL_CHUNK).min(trials))
        });
        let mut total = RandomCheck { trials: 0, successes: 0, counterexample: None };
        for part in parts {
            total.merge(part);
        }
        total
    }
}

impl Executor for Pool {
    fn tally<F: ExponentFamily>(&self, search: &StarSearch<'_, F>) -> Tally {
        let prefixes = search.prefixes(SPLIT_DEPTH);
        let parts = self.map(prefixes.len(), |i| search.tally_prefix(&prefixes[i]));
        let mut total = Tally::default();
        for part in &parts {
            total.merge(part);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fewlists_core::corpus;
    use fewlists_core::nullstellensatz::search::{coefficient_with, Sequential, ENUMERATION_GUARD_EDGES};

    #[test]
    fn pool_matches_sequential() {
        for g in [corpus::k4(), corpus::prism(), corpus::cube()] {
            let w = vec![2u8; g.edge_count()];
            let seq = coefficient_with(&g, &w, &Sequential, ENUMERATION_GUARD_EDGES).unwrap();
            for workers in [1, 3, 8] {
                assert_eq!(coefficient_with(&g, &w, &Pool::new(workers), ENUMERATION_GUARD_EDGES).unwrap(), seq);
            }
        }
    }

    #[test]
    fn sampling_matches_sequential() {
        let g = corpus::dumbbell();
        let f = vec![3u8; g.edge_count()];
        let seq = random_list_range(&g, &f, 11, 0..300);
        assert_eq!(Pool::new(8).random_list_check(&g, &f, 300, 11), seq);
        assert_eq!(Pool::new(1).random_list_check(&g, &f, 0, 11).trials, 0);
    }
}
