//! Data-parallel building blocks with a sequential fallback when the
//! `parallel` feature is disabled. Reductions use a total preference order
//! (higher score, then lower index) so results never depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `0..n` and collects results in index order.
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Evaluates `0..n`, keeping the candidate with the highest finite score;
/// exact ties go to the lower index. `None` marks an infeasible candidate.
pub(crate) fn argmax_by<T, F>(n: u64, eval: F) -> Option<(u64, f64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<(f64, T)> + Sync + Send,
{
    let candidate = |i: u64| {
        eval(i).and_then(|(score, payload)| {
            if score.is_finite() {
                Some((i, score, payload))
            } else {
                None
            }
        })
    };
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(candidate)
            .reduce_with(prefer)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter_map(candidate).reduce(prefer)
    }
}

fn prefer<T>(a: (u64, f64, T), b: (u64, f64, T)) -> (u64, f64, T) {
    if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
        b
    } else {
        a
    }
}
