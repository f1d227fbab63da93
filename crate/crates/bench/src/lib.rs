//! Fixtures shared by the criterion benchmarks.

use tree_span_core::prufer::{random_tree, seeded_rng};
use tree_span_core::Tree;

/// Random labeled tree on `n` vertices, fixed per `(n, seed)`.
pub fn random_fixture(n: usize, seed: u64) -> Tree {
    random_tree(n, &mut seeded_rng(seed))
}
