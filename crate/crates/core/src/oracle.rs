//! Brute-force strong vertex span of any small connected graph.
//!
//! A pair of walks, each moving to a neighbor or staying put at every
//! step, is a single walk in the strong product `G ⊠ G` (minus its
//! loops). Keeping the players at distance at least `k` restricts that
//! walk to the pairs `(u, v)` with `d(u, v) >= k`. Some pair of covering
//! walks keeps distance `k` iff one connected component of this
//! restricted product projects onto every vertex in both coordinates: a
//! walk inside a connected component can visit all of its nodes, and any
//! walk pair stays inside one component.
//!
//! Nothing here is shared with the tree algorithms; the breadth-first
//! search and the component labeling are local to this module.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

/// Largest graph the oracle accepts unless told otherwise.
pub const DEFAULT_CAP: usize = 64;

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Dense all-pairs hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Smallest eccentricity.
    pub fn radius(&self) -> u32 {
        (0..self.n)
            .map(|u| *self.row(u).iter().max().unwrap())
            .min()
            .unwrap_or(0)
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// One BFS per vertex. Fails on disconnected input.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, OracleError> {
    let n = g.n();
    let mut data = vec![INF; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut data[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == INF {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&INF) {
            return Err(OracleError::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, data })
}

/// Pairs `(u, v)` with `d(u, v) >= k`, stored densely at `u * n + v`, with
/// their component labels. Two pairs are adjacent when each coordinate
/// stays or moves to a neighbor.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub k: u32,
    n: usize,
    alive: Vec<bool>,
    component: Vec<u32>,
    components: u32,
}

const NO_COMPONENT: u32 = u32::MAX;

impl ProductGraph {
    pub fn build(g: &Graph, k: u32, dist: &DistanceMatrix) -> Self {
        let n = g.n();
        let alive: Vec<bool> = (0..n * n).map(|i| dist.data[i] >= k).collect();
        let mut product = ProductGraph {
            k,
            n,
            alive,
            component: vec![NO_COMPONENT; n * n],
            components: 0,
        };
        product.label_components(g);
        product
    }

    fn label_components(&mut self, g: &Graph) {
        let mut queue = VecDeque::new();
        let mut scratch = Vec::new();
        for start in 0..self.n * self.n {
            if !self.alive[start] || self.component[start] != NO_COMPONENT {
                continue;
            }
            let id = self.components;
            self.components += 1;
            self.component[start] = id;
            queue.push_back(start);
            while let Some(node) = queue.pop_front() {
                scratch.clear();
                scratch.extend(self.neighbors(g, node));
                for &next in &scratch {
                    if self.component[next] == NO_COMPONENT {
                        self.component[next] = id;
                        queue.push_back(next);
                    }
                }
            }
        }
    }

    /// Live nodes adjacent to `node` (excluding `node` itself).
    pub fn neighbors<'a>(&'a self, g: &'a Graph, node: usize) -> impl Iterator<Item = usize> + 'a {
        let (u, v) = (node / self.n, node % self.n);
        let closed = |x: usize| std::iter::once(x).chain(g.neighbors(x).iter().copied());
        closed(u)
            .flat_map(move |a| closed(v).map(move |b| a * self.n + b))
            .filter(move |&other| other != node && self.alive[other])
    }

    pub fn node_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn component_count(&self) -> u32 {
        self.components
    }

    /// Component label of the pair `(u, v)`, `None` if the pair is closer
    /// than `k`.
    pub fn component_of(&self, u: usize, v: usize) -> Option<u32> {
        match self.component[u * self.n + v] {
            NO_COMPONENT => None,
            c => Some(c),
        }
    }

    /// True iff some component covers every vertex in both coordinates.
    pub fn has_covering_component(&self) -> bool {
        let n = self.n;
        let c = self.components as usize;
        let mut first = vec![0usize; c];
        let mut second = vec![0usize; c];
        let mut seen_first = vec![false; c * n];
        let mut seen_second = vec![false; c * n];
        for node in 0..n * n {
            let id = self.component[node];
            if id == NO_COMPONENT {
                continue;
            }
            let id = id as usize;
            let (u, v) = (node / n, node % n);
            if !seen_first[id * n + u] {
                seen_first[id * n + u] = true;
                first[id] += 1;
            }
            if !seen_second[id * n + v] {
                seen_second[id * n + v] = true;
                second[id] += 1;
            }
        }
        (0..c).any(|id| first[id] == n && second[id] == n)
    }
}

/// Whether two covering walks can keep distance at least `k` throughout.
pub fn feasible_at(g: &Graph, k: u32, dist: &DistanceMatrix) -> bool {
    ProductGraph::build(g, k, dist).has_covering_component()
}

/// Strong vertex span of a connected graph with at most [`DEFAULT_CAP`]
/// vertices.
pub fn product_span_oracle(g: &Graph) -> Result<u32, OracleError> {
    product_span_oracle_capped(g, DEFAULT_CAP)
}

/// Largest feasible `k`, scanning down from the radius. Feasibility is
/// monotone in `k`; debug builds confirm the step below the answer.
pub fn product_span_oracle_capped(g: &Graph, cap: usize) -> Result<u32, OracleError> {
    let n = g.n();
    if n == 0 {
        return Err(OracleError::Empty);
    }
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let dist = all_pairs_distances(g)?;
    let radius = dist.radius();
    for k in (1..=radius).rev() {
        if feasible_at(g, k, &dist) {
            debug_assert!(feasible_at(g, k - 1, &dist), "feasibility not monotone at k = {k}");
            return Ok(k);
        }
    }
    debug_assert!(feasible_at(g, 0, &dist));
    Ok(0)
}
