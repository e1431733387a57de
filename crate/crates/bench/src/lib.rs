//! Shared inputs for the benchmarks.

use georeg_core::oracle::random_cloud;
use georeg_core::PointCloud;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A reproducible random cloud of `n` points.
pub fn cloud(n: usize, seed: u64) -> PointCloud {
    random_cloud(&mut ChaCha8Rng::seed_from_u64(seed), n)
}
