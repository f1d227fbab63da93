//! Test-side helpers: random inputs and naive checks that avoid the code
//! paths they are used to validate.

#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;
use tree_span_core::oracle::{all_pairs_distances, DistanceMatrix};
use tree_span_core::prufer::random_tree;
use tree_span_core::{Graph, Tree, WalkPair};

pub fn random_sized_tree<R: Rng>(rng: &mut R, min: usize, max: usize) -> Tree {
    let n = rng.random_range(min..=max);
    random_tree(n, rng)
}

/// Erdős–Rényi style graph, possibly disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn distances(t: &Tree) -> DistanceMatrix {
    all_pairs_distances(t).unwrap()
}

/// Eccentricity of every vertex from the full distance table.
pub fn eccentricities(d: &DistanceMatrix) -> Vec<u32> {
    (0..d.n()).map(|u| *d.row(u).iter().max().unwrap()).collect()
}

/// Height of the subtree of every vertex when `t` hangs from `root`,
/// by climbing from each vertex to the root.
pub fn subtree_heights(t: &Tree, root: usize) -> Vec<u32> {
    let d = distances(t);
    let n = t.n();
    let parent: Vec<Option<usize>> = (0..n)
        .map(|v| {
            t.neighbors(v)
                .iter()
                .copied()
                .find(|&u| d.get(root, u) + 1 == d.get(root, v))
        })
        .collect();
    let mut height = vec![0u32; n];
    for v in 0..n {
        let mut cur = v;
        while let Some(p) = parent[cur] {
            height[p] = height[p].max(d.get(p, v));
            cur = p;
        }
    }
    height
}

pub fn on_path(d: &DistanceMatrix, from: usize, to: usize, x: usize) -> bool {
    d.get(from, x) + d.get(x, to) == d.get(from, to)
}

/// Lazy random walk: each step waits or moves to a uniform neighbor.
pub fn random_walk<R: Rng>(rng: &mut R, t: &Tree, start: usize, len: usize) -> Vec<usize> {
    let mut walk = vec![start];
    for _ in 1..len {
        let cur = *walk.last().unwrap();
        let next = if rng.random_bool(0.3) {
            cur
        } else {
            *t.neighbors(cur).choose(rng).unwrap_or(&cur)
        };
        walk.push(next);
    }
    walk
}

pub fn random_pair<R: Rng>(rng: &mut R, t: &Tree, len: usize) -> WalkPair {
    let (sa, sb) = (rng.random_range(0..t.n()), rng.random_range(0..t.n()));
    let a = random_walk(rng, t, sa, len);
    let b = random_walk(rng, t, sb, len);
    WalkPair::new(a, b).unwrap()
}

/// Random walk pair with the players at distance at least 2 throughout,
/// or `None` if the tree has no such starting pair.
pub fn random_separated_pair<R: Rng>(
    rng: &mut R,
    t: &Tree,
    d: &DistanceMatrix,
    len: usize,
) -> Option<WalkPair> {
    let n = t.n();
    let starts: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| d.get(u, v) >= 2)
        .collect();
    let &(mut x, mut y) = starts.choose(rng)?;
    let (mut a, mut b) = (vec![x], vec![y]);
    let step = |rng: &mut R, v: usize| {
        if rng.random_bool(0.25) {
            v
        } else {
            *t.neighbors(v).choose(rng).unwrap()
        }
    };
    for _ in 1..len {
        // if no joint move keeps the distance, both wait
        for _ in 0..8 {
            let (nx, ny) = (step(rng, x), step(rng, y));
            if d.get(nx, ny) >= 2 {
                (x, y) = (nx, ny);
                break;
            }
        }
        a.push(x);
        b.push(y);
    }
    Some(WalkPair::new(a, b).unwrap())
}

pub fn min_distance(d: &DistanceMatrix, w: &WalkPair) -> u32 {
    w.a().iter().zip(w.b()).map(|(&x, &y)| d.get(x, y)).min().unwrap()
}

/// The two conditions that force a switch at `(i, j)`, 0-based: for
/// `i <= t < j`, `B(t)` is off the `A(i)`-`A(t)` path, and `B(j)` is on
/// the `A(i)`-`A(j)` path.
pub fn switch_hypotheses(d: &DistanceMatrix, w: &WalkPair, i: usize, j: usize) -> bool {
    let (a, b) = (w.a(), w.b());
    (i..j).all(|t| !on_path(d, a[i], a[t], b[t])) && on_path(d, a[i], a[j], b[j])
}
