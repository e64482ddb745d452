//! Seed-deterministic random source.
//!
//! Identical seeds produce identical streams on every platform. Trial
//! `t` of a batch runs on the substream with seed `seed ^ mix64(t)`, so
//! concurrent trials never share state.

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer, used to spread substream labels.
pub(crate) fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic pseudo-random stream with a recorded seed.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for trial `t`: seed `self.seed ^ mix64(t)`.
    pub fn substream(&self, t: u64) -> Rng {
        Rng::new(self.seed ^ mix64(t))
    }

    /// Draws a fresh independent stream, advancing this one.
    pub fn fork(&mut self) -> Rng {
        let s = self.next_u64();
        Rng::new(s)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.random()
    }

    /// Uniform value in `0..n`. Panics if `n == 0`.
    pub fn range(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    /// Uniformly chosen element of a non-empty slice.
    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.range(xs.len())]
    }

    pub fn coin(&mut self) -> bool {
        self.inner.random()
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        xs.shuffle(&mut self.inner);
    }
}
