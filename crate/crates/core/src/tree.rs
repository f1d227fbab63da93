//! Validated trees, centers and the components left behind when a vertex
//! is removed.

use std::collections::VecDeque;
use std::ops::Deref;

use thiserror::Error;

use crate::graph::{bfs, bfs_distances, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("graph has a cycle: m = {m} but a tree on n = {n} vertices has n - 1 edges")]
    Cycle { n: usize, m: usize },
    #[error("graph is disconnected: {reached} of {n} vertices reachable from vertex 0")]
    Disconnected { n: usize, reached: usize },
}

/// A connected acyclic [`Graph`] with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    /// Accepts `g` iff it is non-empty, connected and has `n - 1` edges.
    pub fn new(g: Graph) -> Result<Self, TreeError> {
        let n = g.n();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if g.m() >= n {
            return Err(TreeError::Cycle { n, m: g.m() });
        }
        let reached = bfs(&g, 0).distances.reached();
        if reached < n {
            return Err(TreeError::Disconnected { n, reached });
        }
        Ok(Tree { graph: g })
    }

    /// Caller guarantees `edges` form a tree on `0..n`.
    pub(crate) fn from_checked_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        debug_assert_eq!(edges.len() + 1, n);
        Tree {
            graph: Graph::from_checked_edges(n, edges),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl TryFrom<Graph> for Tree {
    type Error = TreeError;

    fn try_from(g: Graph) -> Result<Self, TreeError> {
        Tree::new(g)
    }
}

/// Same as [`Tree::new`].
pub fn validate_tree(g: Graph) -> Result<Tree, TreeError> {
    Tree::new(g)
}

/// Center, radius and a diametral path of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterInfo {
    /// One vertex, or two adjacent ones, in ascending order.
    pub centers: Vec<usize>,
    pub radius: u32,
    pub diameter: u32,
    pub diameter_path: Vec<usize>,
}

impl CenterInfo {
    /// The center used as the root of the height scan: the smaller id.
    pub fn primary(&self) -> usize {
        self.centers[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.centers.contains(&v)
    }
}

/// Finds the center with two breadth-first searches: the farthest vertex
/// `u` from vertex 0 is one end of a diameter, and the middle of the
/// `u`-to-farthest path is the center.
pub fn center_and_radius(t: &Tree) -> CenterInfo {
    let (u, _) = bfs_distances(t, 0).farthest();
    let from_u = bfs(t, u);
    let (w, diameter) = from_u.distances.farthest();
    let diameter_path = from_u.path_to(w);
    let d = diameter as usize;
    let centers = if d % 2 == 0 {
        vec![diameter_path[d / 2]]
    } else {
        let (a, b) = (diameter_path[d / 2], diameter_path[d / 2 + 1]);
        vec![a.min(b), a.max(b)]
    };
    CenterInfo {
        centers,
        radius: diameter.div_ceil(2),
        diameter,
        diameter_path,
    }
}

/// True iff no vertex has degree above two. The single vertex counts as a
/// (trivial) path.
pub fn is_path(t: &Tree) -> bool {
    (0..t.n()).all(|v| t.degree(v) <= 2)
}

const PIVOT: usize = usize::MAX;

/// The components of `T - {v}`, ordered by descending reach with ties
/// broken by smallest contained vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSet {
    pub pivot: usize,
    /// Vertex ids of each component, in BFS order from the pivot.
    pub components: Vec<Vec<usize>>,
    /// The single vertex of each component adjacent to the pivot.
    pub border: Vec<usize>,
    /// Eccentricity of the pivot within the closure of each component.
    pub reach: Vec<u32>,
    label: Vec<usize>,
}

impl ComponentSet {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Index of the component containing `u`, `None` for the pivot.
    pub fn component_of(&self, u: usize) -> Option<usize> {
        match self.label[u] {
            PIVOT => None,
            c => Some(c),
        }
    }

    /// Reach of the `i`-th component (0-based), or 0 past the last one.
    pub fn reach_at(&self, i: usize) -> u32 {
        self.reach.get(i).copied().unwrap_or(0)
    }
}

/// Splits `t` at `v` with one BFS from `v`, tagging each vertex with the
/// neighbor of `v` it was reached through.
pub fn components_minus_vertex(t: &Tree, v: usize) -> ComponentSet {
    let n = t.n();
    assert!(v < n, "pivot {v} out of range for n = {n}");
    let first = t.neighbors(v);
    let mut label = vec![PIVOT; n];
    let mut depth = vec![0u32; n];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); first.len()];
    let mut reach = vec![0u32; first.len()];
    let mut queue = VecDeque::with_capacity(n);
    for (c, &b) in first.iter().enumerate() {
        label[b] = c;
        depth[b] = 1;
        queue.push_back(b);
    }
    while let Some(u) = queue.pop_front() {
        let c = label[u];
        members[c].push(u);
        reach[c] = reach[c].max(depth[u]);
        for &w in t.neighbors(u) {
            if w != v && label[w] == PIVOT {
                label[w] = c;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut idx: Vec<usize> = (0..first.len()).collect();
    let smallest: Vec<usize> = members
        .iter()
        .map(|m| m.iter().copied().min().unwrap())
        .collect();
    idx.sort_by(|&a, &b| reach[b].cmp(&reach[a]).then(smallest[a].cmp(&smallest[b])));
    let mut rank = vec![0usize; first.len()];
    for (r, &c) in idx.iter().enumerate() {
        rank[c] = r;
    }
    for l in label.iter_mut().filter(|l| **l != PIVOT) {
        *l = rank[*l];
    }
    let mut members: Vec<Option<Vec<usize>>> = members.into_iter().map(Some).collect();
    ComponentSet {
        pivot: v,
        components: idx.iter().map(|&c| members[c].take().unwrap()).collect(),
        border: idx.iter().map(|&c| first[c]).collect(),
        reach: idx.iter().map(|&c| reach[c]).collect(),
        label,
    }
}
