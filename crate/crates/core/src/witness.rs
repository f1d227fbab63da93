//! Walk pairs that realize the span, and tools to check them.
//!
//! A walk is a sequence of vertices in which consecutive entries are equal
//! (the player waits) or adjacent (the player moves). Two walks of equal
//! length are played in lockstep; the distance they keep is the minimum
//! over time of the distance between the two positions.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bfs, Graph};
use crate::span::strong_vertex_span;
use crate::tree::{components_minus_vertex, ComponentSet, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walks must have at least one step")]
    Empty,
    #[error("walks differ in length: A has {a} steps, B has {b}")]
    LengthMismatch { a: usize, b: usize },
}

/// Two equal-length, non-empty vertex sequences `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWalkPair")]
pub struct WalkPair {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
}

#[derive(Deserialize)]
struct RawWalkPair {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
}

impl TryFrom<RawWalkPair> for WalkPair {
    type Error = WalkError;

    fn try_from(raw: RawWalkPair) -> Result<Self, WalkError> {
        WalkPair::new(raw.a, raw.b)
    }
}

impl WalkPair {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self, WalkError> {
        if a.len() != b.len() {
            return Err(WalkError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        if a.is_empty() {
            return Err(WalkError::Empty);
        }
        Ok(WalkPair { a, b })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Number of time steps.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The same pair with the roles of `A` and `B` exchanged.
    pub fn swapped(&self) -> WalkPair {
        WalkPair {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// The walk exchange document: `{"claimed_span": .., "A": [..], "B": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub claimed_span: u32,
    #[serde(flatten)]
    pub walks: WalkPair,
}

/// Accumulates lockstep moves where one player walks a route and the other
/// waits.
struct Schedule {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl Schedule {
    fn start(a: usize, b: usize) -> Self {
        Schedule {
            a: vec![a],
            b: vec![b],
        }
    }

    fn move_a(&mut self, route: &[usize]) {
        debug_assert_eq!(route.first(), self.a.last());
        let wait = *self.b.last().unwrap();
        for &x in &route[1..] {
            self.a.push(x);
            self.b.push(wait);
        }
    }

    fn move_b(&mut self, route: &[usize]) {
        debug_assert_eq!(route.first(), self.b.last());
        let wait = *self.a.last().unwrap();
        for &x in &route[1..] {
            self.b.push(x);
            self.a.push(wait);
        }
    }

    fn finish(self) -> WalkPair {
        WalkPair::new(self.a, self.b).expect("schedule keeps lengths equal")
    }
}

/// Closed walk from `start` that visits every vertex reachable without
/// stepping on a vertex for which `blocked` holds, crossing each used edge
/// twice. Begins and ends at `start`.
fn closed_tour(t: &Tree, start: usize, blocked: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut walk = vec![start];
    // (vertex, parent, next neighbor index)
    let mut stack = vec![(start, usize::MAX, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (v, parent, next) = *top;
        let nbrs = t.neighbors(v);
        if next < nbrs.len() {
            top.2 += 1;
            let u = nbrs[next];
            if u != parent && !blocked(u) {
                walk.push(u);
                stack.push((u, v, 0));
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                walk.push(parent);
            }
        }
    }
    walk
}

/// Vertices of the path as they appear from one end to the other.
fn path_order(t: &Tree) -> Vec<usize> {
    let end = (0..t.n()).find(|&v| t.degree(v) <= 1).unwrap();
    let mut order = Vec::with_capacity(t.n());
    let (mut prev, mut cur) = (usize::MAX, end);
    loop {
        order.push(cur);
        match t.neighbors(cur).iter().find(|&&w| w != prev) {
            Some(&next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    order
}

/// The two walks cross each other along the path. With an odd number of
/// vertices `B` waits one step at its starting end so the players swap
/// across the middle edge instead of meeting on the middle vertex.
fn path_witness(t: &Tree) -> WalkPair {
    let order = path_order(t);
    let mut a = order.clone();
    let mut b: Vec<usize> = order.iter().rev().copied().collect();
    if order.len() % 2 == 1 {
        b.insert(0, b[0]);
        a.push(*a.last().unwrap());
    }
    WalkPair::new(a, b).unwrap()
}

/// Builds a walk pair whose safety distance equals the span of `t`,
/// returning it with that span.
///
/// Off the path cases, pick `v` with the largest triod size `h` and anchors
/// `v1`, `v2`, `v3` at distance `h` from `v` in its three deepest
/// components `C1`, `C2`, `C3`. With `A` at `v1`, `B` tours everything
/// outside `C1`. `A` then crosses through `v` to `v3`, and `B` tours `C1`
/// and parks at `v1`. The roles then swap: `A` tours everything outside
/// `C1`, `B` crosses to `v2` and `A` finishes inside `C1`. Whoever moves
/// stays out of the waiting player's component, so the distance never
/// drops below `h`.
pub fn build_witness(t: &Tree) -> (WalkPair, u32) {
    let result = strong_vertex_span(t);
    let pair = match result.witness_vertex {
        None if t.n() == 1 => WalkPair::new(vec![0], vec![0]).unwrap(),
        None => path_witness(t),
        Some(pivot) => triod_witness(t, pivot, result.span),
    };
    (pair, result.span)
}

fn triod_witness(t: &Tree, pivot: usize, h: u32) -> WalkPair {
    let cs = components_minus_vertex(t, pivot);
    debug_assert!(cs.len() >= 3 && cs.reach[2] == h);
    let from_pivot = bfs(t, pivot);
    let anchor = |c: usize| {
        *cs.components[c]
            .iter()
            .find(|&&x| from_pivot.distances.get(x) == Some(h))
            .expect("component reach is at least h")
    };
    let (v1, v2, v3) = (anchor(0), anchor(1), anchor(2));
    let to = |x: usize| from_pivot.path_to(x);
    let from = |x: usize| {
        let mut p = from_pivot.path_to(x);
        p.reverse();
        p
    };
    let in_c1 = |x: usize| cs.component_of(x) == Some(0);
    let outside_c1_closure = |x: usize| matches!(cs.component_of(x), Some(c) if c != 0);

    let mut s = Schedule::start(v1, v2);
    // B covers T - C1 while A waits at v1
    s.move_b(&closed_tour(t, v2, in_c1));
    // A crosses to v3
    s.move_a(&[from(v1), to(v3)[1..].to_vec()].concat());
    // B covers C1 and parks at v1
    let mut route = from(v2);
    route.extend_from_slice(&closed_tour(t, pivot, outside_c1_closure)[1..]);
    route.extend_from_slice(&to(v1)[1..]);
    s.move_b(&route);
    // A covers T - C1 while B waits at v1
    s.move_a(&closed_tour(t, v3, in_c1));
    // B crosses to v2
    s.move_b(&[from(v1), to(v2)[1..].to_vec()].concat());
    // A covers C1
    let mut route = from(v3);
    route.extend_from_slice(&closed_tour(t, pivot, outside_c1_closure)[1..]);
    s.move_a(&route);
    s.finish()
}

/// Which of the two walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Walker {
    A,
    B,
}

impl fmt::Display for Walker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Walker::A => f.write_str("A"),
            Walker::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationReason {
    /// Consecutive positions are neither equal nor adjacent.
    NotAWalk { walker: Walker, from: usize, to: usize },
    /// The walk never visits `missing`.
    NotSurjective { walker: Walker, missing: usize },
    /// The players came closer than the claimed span.
    TooClose { distance: u32, claimed: u32 },
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationReason::NotAWalk { walker, from, to } => {
                write!(f, "walk {walker} jumps from {from} to non-adjacent {to}")
            }
            ViolationReason::NotSurjective { walker, missing } => {
                write!(f, "walk {walker} never visits vertex {missing}")
            }
            ViolationReason::TooClose { distance, claimed } => {
                write!(f, "players at distance {distance}, below the claimed {claimed}")
            }
        }
    }
}

/// A failed condition. `step` is the 1-based time step where it shows
/// (`None` for surjectivity, which is a property of the whole walk).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub step: Option<usize>,
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid_a: bool,
    pub valid_b: bool,
    pub surjective_a: bool,
    pub surjective_b: bool,
    /// Smallest distance between the players; only when both walks are valid.
    pub min_distance: Option<u32>,
    pub claimed: u32,
    pub first_violation: Option<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("walk {walker}, step {step}: vertex {id} out of range for n = {n}")]
    VertexOutOfRange {
        walker: Walker,
        step: usize,
        id: usize,
        n: usize,
    },
}

/// Graphs up to this size get an all-pairs table; larger ones run a BFS
/// whenever `A` changes position.
const DENSE_DISTANCE_LIMIT: usize = 2000;

/// Checks a walk pair against `g`: both walks valid, both covering every
/// vertex, and the players never closer than `claimed`.
pub fn verify_walk_pair(g: &Graph, w: &WalkPair, claimed: u32) -> Result<VerifyReport, VerifyError> {
    let n = g.n();
    for (walker, walk) in [(Walker::A, w.a()), (Walker::B, w.b())] {
        if let Some((step, &id)) = walk.iter().enumerate().find(|(_, &x)| x >= n) {
            return Err(VerifyError::VertexOutOfRange {
                walker,
                step: step + 1,
                id,
                n,
            });
        }
    }

    let first_jump = |walk: &[usize]| {
        walk.windows(2)
            .position(|p| p[0] != p[1] && !g.has_edge(p[0], p[1]))
            .map(|i| (i + 2, walk[i], walk[i + 1]))
    };
    let jump_a = first_jump(w.a());
    let jump_b = first_jump(w.b());
    let missing = |walk: &[usize]| {
        let mut seen = vec![false; n];
        for &x in walk {
            seen[x] = true;
        }
        seen.iter().position(|&s| !s)
    };
    let missing_a = missing(w.a());
    let missing_b = missing(w.b());

    let min_distance = if jump_a.is_none() && jump_b.is_none() {
        Some(distance_profile(g, w).into_iter().min().unwrap())
    } else {
        None
    };

    let jump = match (jump_a, jump_b) {
        (Some(a), Some(b)) if b.0 < a.0 => Some((Walker::B, b)),
        (Some(a), _) => Some((Walker::A, a)),
        (None, Some(b)) => Some((Walker::B, b)),
        (None, None) => None,
    };
    let first_violation = if let Some((walker, (step, from, to))) = jump {
        Some(Violation {
            step: Some(step),
            reason: ViolationReason::NotAWalk { walker, from, to },
        })
    } else if let Some(v) = missing_a {
        Some(Violation {
            step: None,
            reason: ViolationReason::NotSurjective {
                walker: Walker::A,
                missing: v,
            },
        })
    } else if let Some(v) = missing_b {
        Some(Violation {
            step: None,
            reason: ViolationReason::NotSurjective {
                walker: Walker::B,
                missing: v,
            },
        })
    } else {
        let profile = distance_profile(g, w);
        profile
            .iter()
            .position(|&d| d < claimed)
            .map(|i| Violation {
                step: Some(i + 1),
                reason: ViolationReason::TooClose {
                    distance: profile[i],
                    claimed,
                },
            })
    };

    Ok(VerifyReport {
        valid_a: jump_a.is_none(),
        valid_b: jump_b.is_none(),
        surjective_a: missing_a.is_none(),
        surjective_b: missing_b.is_none(),
        min_distance,
        claimed,
        first_violation,
    })
}

/// Distance between the players at every step. Unreachable pairs count as
/// `u32::MAX`.
fn distance_profile(g: &Graph, w: &WalkPair) -> Vec<u32> {
    let inf = |d: Option<u32>| d.unwrap_or(u32::MAX);
    if g.n() <= DENSE_DISTANCE_LIMIT {
        let mut sources: Vec<usize> = w.a().to_vec();
        sources.sort_unstable();
        sources.dedup();
        let mut rows = vec![Vec::new(); g.n()];
        for s in sources {
            let d = bfs(g, s).distances;
            rows[s] = (0..g.n()).map(|v| inf(d.get(v))).collect();
        }
        w.a().iter().zip(w.b()).map(|(&x, &y)| rows[x][y]).collect()
    } else {
        let mut cached: Option<(usize, crate::graph::Distances)> = None;
        w.a()
            .iter()
            .zip(w.b())
            .map(|(&x, &y)| {
                if cached.as_ref().map(|c| c.0) != Some(x) {
                    cached = Some((x, bfs(g, x).distances));
                }
                inf(cached.as_ref().unwrap().1.get(y))
            })
            .collect()
    }
}

/// True iff every edge of `t` appears as a consecutive pair of `walk`.
pub fn edge_coverage(t: &Tree, walk: &[usize]) -> bool {
    let traversed: HashSet<(usize, usize)> = walk
        .windows(2)
        .filter(|p| p[0] != p[1] && t.has_edge(p[0], p[1]))
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    traversed.len() == t.m()
}

/// Evidence that `B` switches with `A` at `v`: at step `i` the walks sit
/// in components `alpha` and `beta` of `T - {v}`, `B` stays in `beta` and
/// off `v` until it reaches `v` at step `j`, when `A` is in `gamma`.
/// Steps are 1-based; component ids index [`components_minus_vertex`]'s
/// ordering for `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchCertificate {
    pub v: usize,
    pub i: usize,
    pub j: usize,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

/// First switch of `B` with `A` at `v`: smallest `j`, then the largest `i`
/// below it. For `A` switching with `B`, pass [`WalkPair::swapped`].
pub fn detect_switch(t: &Tree, w: &WalkPair, v: usize) -> Option<SwitchCertificate> {
    let cs = components_minus_vertex(t, v);
    detect_switch_in(&cs, w)
}

/// [`detect_switch`] with the split at `cs.pivot` already computed.
pub fn detect_switch_in(cs: &ComponentSet, w: &WalkPair) -> Option<SwitchCertificate> {
    let v = cs.pivot;
    let (a, b) = (w.a(), w.b());
    let mut window_start = 0;
    for j in 0..w.len() {
        if b[j] != v {
            continue;
        }
        if j > window_start {
            if let (Some(gamma), Some(beta)) = (cs.component_of(a[j]), cs.component_of(b[j - 1])) {
                if beta != gamma {
                    for i in (window_start..j).rev() {
                        if cs.component_of(b[i]) != Some(beta) {
                            break;
                        }
                        match cs.component_of(a[i]) {
                            Some(alpha) if alpha != beta && alpha != gamma => {
                                return Some(SwitchCertificate {
                                    v,
                                    i: i + 1,
                                    j: j + 1,
                                    alpha,
                                    beta,
                                    gamma,
                                });
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        window_start = j + 1;
    }
    None
}
