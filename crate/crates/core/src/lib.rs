//! Strong vertex span and strong edge span of trees.
//!
//! Two players each walk through every vertex of a graph, moving to a
//! neighbor or waiting at each step. The strong vertex span is the largest
//! distance they can keep from each other at all times. For trees it is
//! computed here in linear time ([`strong_vertex_span`]), realized by an
//! explicit pair of walks ([`build_witness`]) and checked against two
//! independent brute-force routes ([`brute_triod_size`] and
//! [`product_span_oracle`]).

#![forbid(unsafe_code)]

pub mod families;
pub mod graph;
pub mod oracle;
pub mod prufer;
pub mod scaling;
pub mod span;
pub mod tree;
pub mod witness;

pub use graph::{bfs, bfs_distances, parse_edge_list, Distances, Graph, GraphError, ParseError, ParseErrorKind};
pub use oracle::{all_pairs_distances, feasible_at, product_span_oracle, DistanceMatrix, OracleError, ProductGraph};
pub use span::{
    brute_triod_size, eta, height_scan, max_eta_vertices, strong_edge_span, strong_vertex_span,
    tree_triod_size, ReachTable, SpanError, SpanKind, SpanResult,
};
pub use tree::{
    center_and_radius, components_minus_vertex, is_path, validate_tree, CenterInfo, ComponentSet, Tree,
    TreeError,
};
pub use witness::{
    build_witness, detect_switch, edge_coverage, verify_walk_pair, SwitchCertificate, VerifyReport, WalkPair,
    WitnessDocument,
};
