use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Number of samples drawn from one partition's RNG stream.
pub const PARTITION_SIZE: usize = 128;

/// RNG for partition `index` of a check seeded with `seed`.
pub fn partition_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index as u64)
}

/// Evaluates `f` on `samples` seeded draws, in parallel across fixed-size
/// partitions. Results are returned in sample order and do not depend on
/// the thread count.
pub fn run_partitioned<T, F>(samples: usize, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    let partitions = samples.div_ceil(PARTITION_SIZE);
    (0..partitions)
        .into_par_iter()
        .flat_map_iter(|p| {
            let mut rng = partition_rng(seed, p);
            let count = PARTITION_SIZE.min(samples - p * PARTITION_SIZE);
            (0..count).map(|_| f(&mut rng)).collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use rand::Rng;

    use super::*;

    #[test]
    fn deterministic_and_complete() {
        let a = run_partitioned(1000, 42, |rng| rng.random::<u64>());
        let b = run_partitioned(1000, 42, |rng| rng.random::<u64>());
        assert_eq!(a.len(), 1000);
        assert_eq!(a, b);
        let c = run_partitioned(1000, 43, |rng| rng.random::<u64>());
        assert_ne!(a, c);
        assert!(run_partitioned(0, 1, |rng| rng.random::<u8>()).is_empty());
    }
}
