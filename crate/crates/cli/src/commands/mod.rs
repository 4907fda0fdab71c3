pub mod bench;
pub mod opcount;
pub mod transform;
pub mod verify;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform samples in `[-1, 1)` from a reproducible stream.
pub fn seeded_signal(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Mixes a base seed with a size exponent and trial index.
pub fn trial_seed(base: u64, log2: u32, trial: u32) -> u64 {
    // splitmix64 finalizer
    let mut z = base ^ ((u64::from(log2) << 32) | u64::from(trial));
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
