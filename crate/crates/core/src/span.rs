//! Strong vertex span and strong edge span of trees in linear time.
//!
//! Removing a vertex `v` from a tree leaves `deg(v)` components. Order
//! them by reach (how far `v` can see into each one). The triod size
//! `eta(v)` is the reach of the third one, or 0 when `deg(v) < 3`, and the
//! triod size of the tree is the largest `eta` over all vertices. The span
//! of a tree is 0 for a single vertex, 1 for any longer path and the triod
//! size of the tree otherwise.
//!
//! Rooting the tree at a center `c` makes the parent side of every other
//! vertex its deepest component, so a single post-order pass that keeps
//! the three largest child reaches per vertex (with the parent slot
//! pre-filled by the radius) yields every `eta` at once.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{center_and_radius, components_minus_vertex, is_path, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanError {
    #[error("vertex {vertex} is not a center of the tree (centers: {centers:?})")]
    NotACenter { vertex: usize, centers: Vec<usize> },
}

/// Per-vertex top-three component reaches from the height scan.
///
/// For `v != root`, `r1[v]` is the radius (a guard standing in for the
/// parent-side component), `r2[v]` is the height of the subtree below `v`
/// and `r3[v]` is `eta(v)`. For the root, `r1..r3` are its three largest
/// component reaches, with `r1[root]` equal to the radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachTable {
    pub root: usize,
    pub radius: u32,
    parent: Vec<usize>,
    pub r1: Vec<u32>,
    pub r2: Vec<u32>,
    pub r3: Vec<u32>,
    /// Vertices in the order the scan finished them (post-order).
    pub order: Vec<usize>,
}

const NO_PARENT: usize = usize::MAX;

impl ReachTable {
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    /// Height of the subtree rooted at `v`.
    pub fn subtree_height(&self, v: usize) -> u32 {
        if v == self.root {
            self.r1[v]
        } else {
            self.r2[v]
        }
    }

    pub fn len(&self) -> usize {
        self.r3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r3.is_empty()
    }
}

/// Runs the guarded height scan from `c`, which must be a center of `t`.
pub fn height_scan(t: &Tree, c: usize) -> Result<ReachTable, SpanError> {
    let info = center_and_radius(t);
    if !info.contains(c) {
        return Err(SpanError::NotACenter {
            vertex: c,
            centers: info.centers,
        });
    }
    Ok(scan_from_center(t, c, info.radius))
}

fn push_top3(top: &mut [u32; 3], reach: u32) {
    if reach > top[0] {
        *top = [reach, top[0], top[1]];
    } else if reach > top[1] {
        top[2] = top[1];
        top[1] = reach;
    } else if reach > top[2] {
        top[2] = reach;
    }
}

/// Post-order DFS with an explicit stack. `radius` must be the radius of
/// `t` and `c` one of its centers.
fn scan_from_center(t: &Tree, c: usize, radius: u32) -> ReachTable {
    let n = t.n();
    // the three slots share a cache line; split into r1..r3 at the end
    let mut top = vec![[radius, 0, 0]; n];
    top[c][0] = 0;
    let mut parent = vec![NO_PARENT; n];
    let mut order = Vec::with_capacity(n);
    // (vertex, index of the next neighbor to look at)
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(n.min(1 << 16));
    stack.push((c, 0));
    while let Some(top_frame) = stack.last_mut() {
        let (v, next) = *top_frame;
        let nbrs = t.neighbors(v);
        if next < nbrs.len() {
            top_frame.1 += 1;
            let u = nbrs[next];
            if u != parent[v] {
                parent[u] = v;
                stack.push((u, 0));
            }
            continue;
        }
        stack.pop();
        order.push(v);
        let p = parent[v];
        if p == NO_PARENT {
            continue;
        }
        let reach = top[v][1] + 1;
        debug_assert!(
            p == c || reach < radius,
            "child reach {reach} at vertex {p} reaches the radius {radius}"
        );
        push_top3(&mut top[p], reach);
    }
    ReachTable {
        root: c,
        radius,
        parent,
        r1: top.iter().map(|r| r[0]).collect(),
        r2: top.iter().map(|r| r[1]).collect(),
        r3: top.iter().map(|r| r[2]).collect(),
        order,
    }
}

/// Triod size of `v`: the third-largest component reach, 0 if `deg(v) < 3`.
pub fn eta(table: &ReachTable, v: usize) -> u32 {
    table.r3[v]
}

/// Largest `eta` over all vertices and the smallest vertex attaining it.
pub fn tree_triod_size(t: &Tree) -> (u32, usize) {
    let info = center_and_radius(t);
    let table = scan_from_center(t, info.primary(), info.radius);
    max_r3(&table)
}

fn max_r3(table: &ReachTable) -> (u32, usize) {
    let mut best = (0, 0);
    for (v, &r) in table.r3.iter().enumerate() {
        if r > best.0 {
            best = (r, v);
        }
    }
    best
}

/// Which case of the span formula applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpanKind {
    Trivial,
    Path,
    Triod,
}

/// A span value with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanResult {
    pub span: u32,
    pub kind: SpanKind,
    /// A vertex whose triod size equals the span; only for `Triod`.
    pub witness_vertex: Option<usize>,
    pub eta: u32,
    pub radius: u32,
}

/// Strong vertex span of `t` in `O(n)`.
pub fn strong_vertex_span(t: &Tree) -> SpanResult {
    if t.n() == 1 {
        return SpanResult {
            span: 0,
            kind: SpanKind::Trivial,
            witness_vertex: None,
            eta: 0,
            radius: 0,
        };
    }
    if is_path(t) {
        return SpanResult {
            span: 1,
            kind: SpanKind::Path,
            witness_vertex: None,
            eta: 0,
            radius: (t.n() as u32) / 2,
        };
    }
    let info = center_and_radius(t);
    let table = scan_from_center(t, info.primary(), info.radius);
    let (value, v) = max_r3(&table);
    SpanResult {
        span: value,
        kind: SpanKind::Triod,
        witness_vertex: Some(v),
        eta: value,
        radius: info.radius,
    }
}

/// Strong edge span of `t`. On trees a walk visits every vertex exactly
/// when it traverses every edge, so this coincides with
/// [`strong_vertex_span`].
pub fn strong_edge_span(t: &Tree) -> SpanResult {
    strong_vertex_span(t)
}

/// Triod size of the tree straight from the definition: split at every
/// vertex, sort the reaches, take the third. `O(n^2)`.
pub fn brute_triod_size(t: &Tree) -> u32 {
    (0..t.n())
        .map(|v| brute_eta(t, v))
        .max()
        .unwrap_or(0)
}

/// `eta(v)` straight from the definition.
pub fn brute_eta(t: &Tree, v: usize) -> u32 {
    let cs = components_minus_vertex(t, v);
    if cs.len() < 3 {
        0
    } else {
        cs.reach[2]
    }
}

/// All vertices whose triod size equals the triod size of the tree,
/// ascending.
pub fn max_eta_vertices(t: &Tree) -> Vec<usize> {
    let info = center_and_radius(t);
    let table = scan_from_center(t, info.primary(), info.radius);
    let (best, _) = max_r3(&table);
    (0..t.n()).filter(|&v| table.r3[v] == best).collect()
}
