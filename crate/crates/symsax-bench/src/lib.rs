//! Synthetic workload generators shared by the benchmark targets.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use symsax::{Instance, LabeledDataset, TimeSeries};

/// A reproducible random-walk series of length `n`.
pub fn random_walk(seed: u64, n: usize) -> TimeSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut level = 0.0;
    let values = (0..n)
        .map(|_| {
            level += rng.gen_range(-1.0..1.0);
            level
        })
        .collect();
    TimeSeries::new(values).expect("random walk values are finite")
}

/// A dataset of `count` random walks of length `n` over `classes` labels.
pub fn random_walk_dataset(seed: u64, count: usize, n: usize, classes: usize) -> LabeledDataset {
    let instances = (0..count)
        .map(|i| Instance {
            label: (i % classes).to_string(),
            series: random_walk(seed.wrapping_add(i as u64), n),
        })
        .collect();
    LabeledDataset::new(format!("walks-{seed}"), instances).expect("nonempty dataset")
}
