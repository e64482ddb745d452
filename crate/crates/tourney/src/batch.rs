//! Batch trial runner.
//!
//! Trial `t` runs on the substream `seed ^ mix64(t)`, so results are
//! independent of scheduling and identical between the parallel and
//! sequential code paths. With the default `parallel` feature the trials
//! fan out over rayon; without it they run in a plain loop.

use crate::rng::Rng;

/// Runs `trials` seeded trials and collects the results in trial order.
pub fn map_trials<T, F>(seed: u64, trials: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut Rng) -> T + Sync,
{
    let base = Rng::new(seed);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..trials as u64)
            .into_par_iter()
            .map(|t| {
                let mut rng = base.substream(t);
                f(t, &mut rng)
            })
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = &base;
        map_trials_serial(seed, trials, f)
    }
}

/// Always-sequential variant, kept alongside the parallel path so the
/// two can be benchmarked against each other.
pub fn map_trials_serial<T, F>(seed: u64, trials: usize, f: F) -> Vec<T>
where
    F: Fn(u64, &mut Rng) -> T,
{
    let base = Rng::new(seed);
    (0..trials as u64)
        .map(|t| {
            let mut rng = base.substream(t);
            f(t, &mut rng)
        })
        .collect()
}
