//! Thread pool sized by `ORDMATCH_THREADS` (default: all cores).

use anyhow::{Context, Result};
use rayon::prelude::*;

pub const THREADS_VAR: &str = "ORDMATCH_THREADS";

pub fn thread_count() -> usize {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn pool() -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .context("building thread pool")
}

/// `f` over `items` on the pool; results come back in input order, so the
/// output never depends on scheduling.
pub fn map<T, R, F>(pool: &rayon::ThreadPool, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    pool.install(|| items.par_iter().map(f).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let p = pool().unwrap();
        let v: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&p, &v, |x| x * 2), v.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
