//! Shared fixtures for the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use diffusion_core::{ChipConfiguration, Graph};

/// Seeded uniform configuration in `[lo, hi]`.
pub fn seeded_config(g: &Graph, lo: i64, hi: i64, seed: u64) -> ChipConfiguration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ChipConfiguration::new(
        (0..g.vertex_count())
            .map(|_| rng.random_range(lo..=hi))
            .collect(),
    )
}
