//! Simple undirected graphs in compressed adjacency form, the edge-list
//! text format, and breadth-first distances.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Marker stored for vertices a traversal never reached.
const UNREACHED: u32 = u32::MAX;

/// Errors raised when building a [`Graph`] from an explicit edge slice.
/// `edge` is the 0-based index into that slice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { edge: usize, id: usize, n: usize },
    #[error("edge {edge}: self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicate edge {u}-{v}")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
}

/// What went wrong while reading the edge-list text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input holds no vertex count")]
    MissingVertexCount,
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("edge is missing its second endpoint")]
    UnpairedEndpoint,
    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
}

/// A parse failure together with the 1-based position of the offending
/// token (comment lines do not count).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("token {token}: {kind}")]
pub struct ParseError {
    pub token: usize,
    pub kind: ParseErrorKind,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are stored contiguously and sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and repeated
    /// edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (edge, &(u, v)) in edges.iter().enumerate() {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { edge, id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { edge, u, v });
            }
        }
        Ok(Self::from_checked_edges(n, edges))
    }

    /// Caller guarantees the edges are in range, loop-free and distinct.
    pub(crate) fn from_checked_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; 2 * edges.len()];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph { n, offsets, targets }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses the edge-list format: optional `#` comment lines, the vertex
/// count, then whitespace-separated pairs of 0-based ids until the end of
/// the input.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .enumerate()
        .map(|(i, tok)| (i + 1, tok));

    let number = |(pos, tok): (usize, &str)| {
        tok.parse::<usize>().map(|x| (pos, x)).map_err(|_| ParseError {
            token: pos,
            kind: ParseErrorKind::Malformed(tok.to_owned()),
        })
    };

    let (_, n) = match tokens.next() {
        Some(t) => number(t)?,
        None => {
            return Err(ParseError {
                token: 1,
                kind: ParseErrorKind::MissingVertexCount,
            })
        }
    };

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    while let Some(first) = tokens.next() {
        let (pos_u, u) = number(first)?;
        let (pos_v, v) = match tokens.next() {
            Some(t) => number(t)?,
            None => {
                return Err(ParseError {
                    token: pos_u + 1,
                    kind: ParseErrorKind::UnpairedEndpoint,
                })
            }
        };
        for (pos, id) in [(pos_u, u), (pos_v, v)] {
            if id >= n {
                return Err(ParseError {
                    token: pos,
                    kind: ParseErrorKind::VertexOutOfRange { id, n },
                });
            }
        }
        if u == v {
            return Err(ParseError {
                token: pos_v,
                kind: ParseErrorKind::SelfLoop { vertex: u },
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError {
                token: pos_u,
                kind: ParseErrorKind::DuplicateEdge { u, v },
            });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_checked_edges(n, &edges))
}

/// Hop counts from a single source. Unreached vertices report `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances {
    dist: Vec<u32>,
}

impl Distances {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHED => None,
            d => Some(d),
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// All entries in vertex order.
    pub fn to_vec(&self) -> Vec<Option<u32>> {
        (0..self.dist.len()).map(|v| self.get(v)).collect()
    }

    /// Largest finite distance together with the smallest vertex attaining it.
    pub fn farthest(&self) -> (usize, u32) {
        let mut best = (0, 0);
        for (v, &d) in self.dist.iter().enumerate() {
            if d != UNREACHED && d > best.1 {
                best = (v, d);
            }
        }
        best
    }

    pub fn reached(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHED).count()
    }
}

/// A breadth-first search tree: distances, parent pointers and the visit
/// order.
#[derive(Debug, Clone)]
pub struct BfsTree {
    pub source: usize,
    pub distances: Distances,
    parent: Vec<usize>,
    pub order: Vec<usize>,
}

impl BfsTree {
    /// BFS parent of `v`; `None` for the source and for unreached vertices.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            UNREACHED_PARENT => None,
            p => Some(p),
        }
    }

    /// Vertices on the shortest path from the source to `target`,
    /// source first. Empty if `target` was not reached.
    pub fn path_to(&self, target: usize) -> Vec<usize> {
        if self.distances.get(target).is_none() {
            return Vec::new();
        }
        let mut path = vec![target];
        let mut cur = target;
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

const UNREACHED_PARENT: usize = usize::MAX;

/// Breadth-first search from `src`, keeping parent pointers.
pub fn bfs(g: &Graph, src: usize) -> BfsTree {
    assert!(src < g.n(), "source {src} out of range for n = {}", g.n());
    let mut dist = vec![UNREACHED; g.n()];
    let mut parent = vec![UNREACHED_PARENT; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    BfsTree {
        source: src,
        distances: Distances { dist },
        parent,
        order,
    }
}

/// Hop counts from `src` to every vertex.
pub fn bfs_distances(g: &Graph, src: usize) -> Distances {
    assert!(src < g.n(), "source {src} out of range for n = {}", g.n());
    let mut dist = vec![UNREACHED; g.n()];
    // the visit order doubles as the queue
    let mut queue = Vec::with_capacity(g.n());
    dist[src] = 0;
    queue.push(src);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push(w);
            }
        }
    }
    Distances { dist }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_edge_list("2\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parses_star_with_comments() {
        let g = parse_edge_list("# claw\n4\n  # hub is 0\n0 1\n0 2\n0 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse_edge_list("3\n0 1\n0 1").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 0, v: 1 });
        assert_eq!(err.token, 4);
        let err = parse_edge_list("3\n0 1\n1 0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 1, v: 0 });
    }

    #[test]
    fn reports_token_positions() {
        let err = parse_edge_list("3\n0 x").unwrap_err();
        assert_eq!(err.token, 3);
        assert_eq!(err.kind, ParseErrorKind::Malformed("x".into()));

        let err = parse_edge_list("3\n0 3").unwrap_err();
        assert_eq!(err.token, 3);
        assert_eq!(err.kind, ParseErrorKind::VertexOutOfRange { id: 3, n: 3 });

        let err = parse_edge_list("3\n2 2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SelfLoop { vertex: 2 });

        let err = parse_edge_list("3\n0 1 2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnpairedEndpoint);

        let err = parse_edge_list("# nothing\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingVertexCount);

        let err = parse_edge_list("-1").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Malformed("-1".into()));
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { edge: 0, id: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop { edge: 0, vertex: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge { edge: 2, u: 2, v: 1 })
        );
    }

    #[test]
    fn display_round_trips() {
        let g = Graph::from_edges(5, &[(3, 1), (0, 4), (1, 2)]).unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn bfs_on_path_and_star() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            bfs_distances(&path, 0).to_vec(),
            vec![Some(0), Some(1), Some(2)]
        );
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            bfs_distances(&star, 0).to_vec(),
            vec![Some(0), Some(1), Some(1), Some(1)]
        );
        assert_eq!(
            bfs_distances(&star, 1).to_vec(),
            vec![Some(1), Some(0), Some(2), Some(2)]
        );
    }

    #[test]
    fn bfs_marks_unreached() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let tree = bfs(&g, 0);
        assert_eq!(tree.distances.get(2), None);
        assert_eq!(tree.distances.reached(), 2);
        assert_eq!(tree.parent(1), Some(0));
        assert_eq!(tree.parent(0), None);
        assert!(tree.path_to(3).is_empty());
        assert_eq!(tree.path_to(1), vec![0, 1]);
    }
}
