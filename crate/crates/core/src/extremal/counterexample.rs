//! The cocktail-party graph as a counterexample: more triangles per edge than
//! the clique-cover minimum suggests, with fewer edges.

use serde::Serialize;

use super::min_edges_kcover;
use crate::cover::{has_cover, CoverSpec};
use crate::format::graph6;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub l_half: usize,
    /// graph6 text of the graph.
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    /// The graph has a `(3, 2·l_half)`-cover.
    pub cover_holds: bool,
    /// Minimum edges of a connected graph on the same vertex count with a
    /// `(2·l_half + 2, 1)`-cover.
    pub bound: usize,
    pub strictly_smaller: bool,
}

/// Builds `K_{2ℓ'+4}` minus a perfect matching and compares its edge count
/// against the `(2ℓ'+2, 1)`-cover minimum on `2ℓ'+4` vertices.
pub fn cocktail_party_counterexample(l_half: usize) -> CounterexampleReport {
    assert!(l_half >= 1, "l_half must be at least 1");
    let g = Graph::complete_multipartite_pairs(l_half + 2);
    let n = g.vertex_count();
    let edges = g.edge_count();
    let cover_holds = has_cover(&g, CoverSpec::new(3, 2 * l_half).expect("valid")).holds;
    let bound = min_edges_kcover(n, 2 * l_half + 2).expect("n > k");
    CounterexampleReport {
        l_half,
        graph: graph6::encode(&g),
        vertices: n,
        edges,
        cover_holds,
        bound,
        strictly_smaller: edges < bound,
    }
}
