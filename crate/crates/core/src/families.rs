//! Named tree families used throughout the tests and benchmarks.

use crate::tree::Tree;

/// Path `0 - 1 - ... - (n-1)`. Panics if `n == 0`.
pub fn path(n: usize) -> Tree {
    assert!(n > 0, "path needs at least one vertex");
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Tree::from_checked_edges(n, &edges)
}

/// Star `K_{1,leaves}` with hub 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Tree {
    spider(&vec![1; leaves])
}

/// Hub 0 with one path ("leg") per entry of `legs`, laid out leg after leg
/// in the order given. Zero-length legs are skipped.
pub fn spider(legs: &[usize]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_checked_edges(next, &edges)
}

/// Perfect binary tree whose leaves sit at depth `height`, in heap order:
/// the children of `i` are `2i + 1` and `2i + 2`.
pub fn perfect_binary(height: u32) -> Tree {
    let n = (1usize << (height + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    Tree::from_checked_edges(n, &edges)
}

/// Two adjacent degree-3 hubs (0 and 1), each carrying two leaves.
pub fn h_tree() -> Tree {
    Tree::from_checked_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
}
