//! Data-parallel mapping over work items with deterministic, input-ordered
//! results.
//!
//! With the `parallel` feature (default) the work runs on a rayon pool sized
//! by `jobs`; without it, or with `jobs = 1`, the sequential path runs.
//! Outputs are always collected in input order, so report streams are
//! byte-identical either way.

/// Always-sequential mapping; the fallback path and the baseline the bench
/// suite compares against.
pub fn map_ordered_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// Mapping over `items` with `jobs` workers (0 = default parallelism).
/// Results are in input order regardless of scheduling.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return map_ordered_seq(items, f);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction");
    pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect())
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: &[T], _jobs: usize, f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    map_ordered_seq(items, f)
}
