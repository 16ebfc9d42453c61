//! Benchmark fixtures shared by the criterion benches.

use hunters_core::generators::{random_instance, RandomKind};
use hunters_core::Graph;

/// `count` seeded graphs of one kind on `n` vertices.
pub fn batch(kind: RandomKind, n: usize, count: u64) -> Vec<Graph> {
    (0..count).map(|seed| random_instance(kind, n, seed)).collect()
}
