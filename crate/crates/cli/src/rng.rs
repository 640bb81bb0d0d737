//! Deterministic randomness for experiments.
//!
//! All random draws flow through ChaCha8 seeded from a 64-bit value, and
//! per-trial sub-seeds are derived from the master seed and the trial index
//! with a SplitMix64 finalizer. The same (seed, index) pair always produces
//! the same stream, on every platform and regardless of worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use diffusion_core::{ChipConfiguration, Error, Graph};

/// Mixes a master seed and an index into an independent sub-seed.
pub fn mix_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One chip count per vertex, independently uniform over `[lo, hi]`.
pub fn random_config(g: &Graph, lo: i64, hi: i64, seed: u64) -> Result<ChipConfiguration, Error> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let mut rng = seeded_rng(seed);
    Ok(ChipConfiguration::new(
        (0..g.vertex_count())
            .map(|_| rng.random_range(lo..=hi))
            .collect(),
    ))
}
