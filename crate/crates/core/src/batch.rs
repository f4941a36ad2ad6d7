//! Batch execution over independent instances.
//!
//! Everything heavy in this crate (family sweeps, oracle cross-checks,
//! property suites) is a map over independent, immutable inputs.
//! With the `parallel` feature (default) those maps run on rayon;
//! without it they fall back to a plain sequential loop. Results always
//! come back in index order, so the two modes are interchangeable.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every index in `0..count`, collecting results in index
/// order. Parallel when the `parallel` feature is on.
pub fn run_batch<R, F>(count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        run_batch_par(count, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_batch_seq(count, f)
    }
}

/// Sequential variant, always available.
pub fn run_batch_seq<R, F>(count: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..count).map(f).collect()
}

/// Rayon variant.
#[cfg(feature = "parallel")]
pub fn run_batch_par<R, F>(count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    (0..count).into_par_iter().map(f).collect()
}
