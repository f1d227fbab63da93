//! Prüfer sequences: exhaustive enumeration and uniform sampling of
//! labeled trees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruferError {
    #[error("sequence of length {len} encodes a tree on {n} vertices, but entry {value} is not below n")]
    EntryOutOfRange { len: usize, n: usize, value: usize },
}

/// Decodes a Prüfer sequence of length `n - 2` into the labeled tree on
/// `n` vertices it encodes, in linear time.
pub fn decode(seq: &[usize]) -> Result<Tree, PruferError> {
    let n = seq.len() + 2;
    if let Some(&value) = seq.iter().find(|&&x| x >= n) {
        return Err(PruferError::EntryOutOfRange {
            len: seq.len(),
            n,
            value,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(Tree::from_checked_edges(n, &edges))
}

/// Inverse of [`decode`] for trees with at least two vertices.
pub fn encode(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        removed[leaf] = true;
        let next = *t.neighbors(leaf).iter().find(|&&w| !removed[w]).unwrap();
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while removed[ptr] || degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    seq
}

/// Uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n > 0, "a tree needs at least one vertex");
    if n == 1 {
        return Tree::from_checked_edges(1, &[]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    decode(&seq).expect("entries drawn below n")
}

/// Deterministic generator used by the CLI, tests and benchmarks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labeled tree on `n` vertices, in lexicographic order of Prüfer
/// sequence. Yields `n^(n-2)` trees (one tree for `n` = 1 or 2).
pub fn all_trees(n: usize) -> AllTrees {
    assert!(n > 0, "a tree needs at least one vertex");
    AllTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    }
}

/// Iterator returned by [`all_trees`].
#[derive(Debug, Clone)]
pub struct AllTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for AllTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = if self.n == 1 {
            Tree::from_checked_edges(1, &[])
        } else {
            decode(&self.seq).unwrap()
        };
        // odometer increment, last digit fastest
        self.done = true;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }
}

/// `n^(n-2)`, the number of labeled trees on `n` vertices.
pub fn labeled_tree_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => (n as u64).pow(n as u32 - 2),
    }
}
