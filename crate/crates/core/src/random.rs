//! Seeded uniform random graphs, G(n, p).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};

/// Deterministic RNG for a given seed. Batch work derives one stream per
/// instance from the same seed, so results do not depend on scheduling.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn instance_rng(seed: u64, instance: u64) -> ChaCha8Rng {
    let mut rng = seeded_rng(seed);
    rng.set_stream(instance);
    rng
}

/// Uniform edge model: each of the n(n-1)/2 possible edges is present
/// independently with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut rows = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    Graph::from_rows(rows)
}
