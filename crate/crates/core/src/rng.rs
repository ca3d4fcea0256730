//! The seeded generator behind every randomized operation.
//!
//! splitmix64 with the seed used directly as the initial state, so any
//! implementation of the reference algorithm reproduces our graphs.

use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

pub type SeededRng = SplitMix64;

pub trait SeededRngExt {
    fn new(seed: u64) -> Self;
}

impl SeededRngExt for SeededRng {
    fn new(seed: u64) -> Self {
        SplitMix64::seed_from_u64(seed)
    }
}

/// Derives an independent stream seed for sub-task `index` of a seeded run.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    use rand::RngCore;
    let mut rng = SeededRng::new(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    rng.next_u64()
}
