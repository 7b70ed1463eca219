use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Counter-based per-walker stream: the walker id is mixed into the
/// run seed, so ensembles are reproducible and independent of
/// evaluation order.
pub fn walker_rng(seed: u64, walker: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(walker)))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
