//! Fixed benchmark inputs, so every run times the same sequences.

use potbip::gen::{draw, hard_extremes, GenSpec};
use potbip::DegreeSequence;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` hard-range instances of length `n` from a fixed seed.
pub fn hard_instances(n: usize, count: usize, seed: u64) -> Vec<DegreeSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (d1, dn) = hard_extremes(n, &mut rng);
            let spec = GenSpec {
                n,
                d1,
                dn,
                seed,
                count: 1,
            };
            draw(&spec, &mut rng).expect("hard range is feasible")
        })
        .collect()
}
