//! `(k, ℓ)`-covers: every edge lies in at least `ℓ` copies of `K_k`.
//!
//! Also hosts ℓ-truss decomposition, the special case `k = 3` read as a
//! peeling process.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{count_cliques_through, Edge, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("clique order k must be at least 3, got {0}")]
    CliqueOrder(usize),
    #[error("multiplicity l must be at least 1, got {0}")]
    Multiplicity(usize),
    #[error("hypothesis failed: the graph has no ({k},1)-cover; edge {edge} lies in no K_{k}")]
    MissingCover { k: usize, edge: Edge },
}

/// A `(k, ℓ)` requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    k: usize,
    l: usize,
}

impl CoverSpec {
    pub fn new(k: usize, l: usize) -> Result<Self, CoverError> {
        if k < 3 {
            return Err(CoverError::CliqueOrder(k));
        }
        if l < 1 {
            return Err(CoverError::Multiplicity(l));
        }
        Ok(CoverSpec { k, l })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn l(self) -> usize {
        self.l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Defect {
    pub u: usize,
    pub v: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCount {
    pub u: usize,
    pub v: usize,
    pub count: usize,
}

/// Outcome of a cover check. `holds` is true exactly when `defects` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub holds: bool,
    pub k: usize,
    pub l: usize,
    /// Failing edges in lexicographic order, each with the number of cliques
    /// found (always below `l`).
    pub defects: Vec<Defect>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<EdgeCount>>,
}

/// Checks the cover condition, stopping each per-edge count at `ℓ`.
pub fn has_cover(g: &Graph, spec: CoverSpec) -> CoverReport {
    check(g, spec, false)
}

/// Like [`has_cover`] but records the exact clique count of every edge.
pub fn has_cover_with_counts(g: &Graph, spec: CoverSpec) -> CoverReport {
    check(g, spec, true)
}

fn check(g: &Graph, spec: CoverSpec, full: bool) -> CoverReport {
    let mut defects = Vec::new();
    let mut counts = full.then(Vec::new);
    for e in g.edges() {
        let limit = if full { usize::MAX } else { spec.l };
        let c = count_cliques_through(g.rows(), e.u, e.v, spec.k, limit);
        if c < spec.l {
            defects.push(Defect { u: e.u, v: e.v, count: c });
        }
        if let Some(counts) = counts.as_mut() {
            counts.push(EdgeCount { u: e.u, v: e.v, count: c });
        }
    }
    CoverReport { holds: defects.is_empty(), k: spec.k, l: spec.l, defects, counts }
}

/// Boolean form of [`has_cover`] for hot loops.
#[inline]
pub fn covers(rows: &[u64], k: usize, l: usize) -> bool {
    for (u, &row) in rows.iter().enumerate() {
        let mut higher = row & !(((1u64 << u) - 1) | (1u64 << u));
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            if count_cliques_through(rows, u, v, k, l) < l {
                return false;
            }
        }
    }
    true
}

/// Every vertex lies in some `K_k` (the vertex-version condition).
pub fn every_vertex_in_clique(rows: &[u64], k: usize) -> bool {
    (0..rows.len()).all(|v| {
        let mut found = false;
        crate::graph::extend_cliques(rows, rows[v], k - 1, 0, &mut |_| {
            found = true;
            false
        });
        found
    })
}

/// An ℓ-truss: a component of the peeled graph with its vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truss {
    pub graph: Graph,
    /// `vertices[i]` is the id in the input graph of truss vertex `i`.
    pub vertices: Vec<usize>,
}

/// Peels edges lying in fewer than `l` triangles until none remain, then
/// splits the survivors into connected components.
///
/// Supports are recounted inside the current survivor graph, so the result
/// is the unique largest edge set in which every edge has support `≥ l`.
pub fn truss_decompose(g: &Graph, l: usize) -> Vec<Truss> {
    split_components(&surviving_subgraph(g, l))
}

/// The graph left after peeling (same vertex set as `g`).
pub fn surviving_subgraph(g: &Graph, l: usize) -> Graph {
    let n = g.vertex_count();
    let mut h = g.clone();
    let mut support = vec![0usize; n * n];
    let mut queued = vec![false; n * n];
    let mut queue = VecDeque::new();
    for e in g.edges() {
        let s = h.triangle_vertices(e).map(|t| t.len()).unwrap_or(0);
        support[e.u * n + e.v] = s;
        if s < l {
            queued[e.u * n + e.v] = true;
            queue.push_back(e);
        }
    }
    while let Some(e) = queue.pop_front() {
        let common = h.neighbors(e.u).intersection(h.neighbors(e.v));
        h.remove_edge(e.u, e.v);
        for w in common {
            for x in [e.u, e.v] {
                let f = Edge::new(x, w).expect("distinct");
                let idx = f.u * n + f.v;
                support[idx] -= 1;
                if support[idx] < l && !queued[idx] {
                    queued[idx] = true;
                    queue.push_back(f);
                }
            }
        }
    }
    h
}

/// Naive peeling that always removes the first under-supported edge of
/// `order`. Exposed so callers can check that the fixpoint does not depend
/// on the removal order.
pub fn peel_in_order(g: &Graph, l: usize, order: &[Edge]) -> Graph {
    let mut h = g.clone();
    loop {
        let weak = order.iter().copied().find(|&e| {
            h.contains_edge(e) && h.triangle_vertices(e).map(|t| t.len()).unwrap_or(0) < l
        });
        match weak {
            Some(e) => h.remove_edge(e.u, e.v),
            None => return h,
        }
    }
}

fn split_components(h: &Graph) -> Vec<Truss> {
    h.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let (graph, vertices) = h.induced_subgraph(c);
            Truss { graph, vertices }
        })
        .collect()
}

/// Checks that a graph with a `(k,1)`-cover also has a `(3,k−2)`-cover.
///
/// Returns an error naming the failed hypothesis when `g` has no
/// `(k,1)`-cover.
pub fn implied_truss_cover(g: &Graph, k: usize) -> Result<bool, CoverError> {
    let spec = CoverSpec::new(k, 1)?;
    let report = has_cover(g, spec);
    if let Some(d) = report.defects.first() {
        return Err(CoverError::MissingCover { k, edge: Edge { u: d.u, v: d.v } });
    }
    Ok(has_cover(g, CoverSpec::new(3, k - 2)?).holds)
}

/// Vertex set of `g` touched by at least one edge.
pub fn non_isolated(g: &Graph) -> VertexSet {
    (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(k: usize, l: usize) -> CoverSpec {
        CoverSpec::new(k, l).unwrap()
    }

    fn k4_minus_edge() -> Graph {
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        g
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    }

    #[test]
    fn spec_validation() {
        assert_eq!(CoverSpec::new(2, 1), Err(CoverError::CliqueOrder(2)));
        assert_eq!(CoverSpec::new(3, 0), Err(CoverError::Multiplicity(0)));
    }

    #[test]
    fn cover_examples() {
        assert!(has_cover(&Graph::complete(4), spec(3, 2)).holds);
        let r = has_cover(&k4_minus_edge(), spec(3, 2));
        assert!(!r.holds);
        assert_eq!(r.defects.len(), 4);
        assert!(r.defects.iter().all(|d| d.count == 1));
        assert!(has_cover(&Graph::complete_multipartite_pairs(3), spec(3, 2)).holds);
        assert!(has_cover(&Graph::new(5), spec(5, 7)).holds);
    }

    #[test]
    fn full_counts_are_exact() {
        let r = has_cover_with_counts(&Graph::complete(6), spec(3, 1));
        let counts = r.counts.unwrap();
        assert_eq!(counts.len(), 15);
        assert!(counts.iter().all(|c| c.count == 4));
        let r = has_cover(&Graph::complete(6), spec(4, 2));
        assert!(r.holds && r.counts.is_none());
    }

    #[test]
    fn report_json_shape() {
        let r = has_cover(&k4_minus_edge(), spec(3, 2));
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["holds"], false);
        assert_eq!(v["k"], 3);
        assert_eq!(v["l"], 2);
        assert_eq!(v["defects"][0], serde_json::json!({"u": 0, "v": 2, "count": 1}));
        assert!(v.get("counts").is_none());
    }

    #[test]
    fn truss_examples() {
        let t = truss_decompose(&Graph::complete(5), 3);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].graph, Graph::complete(5));
        assert!(truss_decompose(&k4_minus_edge(), 2).is_empty());
        let t = truss_decompose(&bowtie(), 1);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].graph.edge_count(), 6);
    }

    #[test]
    fn truss_splits_components_and_maps_vertices() {
        // two K4s joined by a pendant path: the path is peeled, the K4s remain
        let mut g = Graph::new(10);
        for base in [0, 6] {
            for a in 0..4 {
                for b in a + 1..4 {
                    g.add_edge(base + a, base + b);
                }
            }
        }
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 6);
        let t = truss_decompose(&g, 2);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(t[1].vertices, vec![6, 7, 8, 9]);
        assert!(t.iter().all(|x| x.graph == Graph::complete(4)));
    }

    /// Largest edge set in which every edge has ≥ l triangles inside the set,
    /// by enumeration of all edge subsets.
    fn brute_truss_edges(g: &Graph, l: usize) -> Vec<Edge> {
        let edges: Vec<Edge> = g.edges().collect();
        let mut union = vec![false; edges.len()];
        for mask in 0u32..1 << edges.len() {
            let mut h = Graph::new(g.vertex_count());
            for (i, e) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    h.add_edge(e.u, e.v);
                }
            }
            if h.edges().all(|e| h.triangle_vertices(e).unwrap().len() >= l) {
                for i in 0..edges.len() {
                    union[i] |= mask >> i & 1 == 1;
                }
            }
        }
        edges.into_iter().zip(union).filter(|(_, u)| *u).map(|(e, _)| e).collect()
    }

    #[test]
    fn truss_matches_subset_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..40 {
            let n = 5 + trial % 3;
            let mut g = Graph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rand::Rng::gen_bool(&mut rng, 0.55) {
                        g.add_edge(a, b);
                    }
                }
            }
            if g.edge_count() > 16 {
                continue;
            }
            for l in 1..=2 {
                let got: Vec<Edge> = surviving_subgraph(&g, l).edges().collect();
                assert_eq!(got, brute_truss_edges(&g, l), "graph {g:?}, l={l}");
            }
        }
    }

    #[test]
    fn truss_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = 9;
            let mut g = Graph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rand::Rng::gen_bool(&mut rng, 0.5) {
                        g.add_edge(a, b);
                    }
                }
            }
            let reference = surviving_subgraph(&g, 2);
            for _ in 0..4 {
                let mut order: Vec<Edge> = g.edges().collect();
                order.shuffle(&mut rng);
                assert_eq!(peel_in_order(&g, 2, &order), reference);
            }
            for t in truss_decompose(&g, 2) {
                assert!(t.graph.edges().all(|e| t.graph.triangle_vertices(e).unwrap().len() >= 2));
            }
        }
    }

    #[test]
    fn monotone_in_multiplicity() {
        let g = Graph::complete(6);
        let top = (1..20).take_while(|&l| has_cover(&g, spec(4, l)).holds).last().unwrap();
        assert_eq!(top, 6);
        assert!((1..=top).all(|l| has_cover(&g, spec(4, l)).holds));
    }

    #[test]
    fn implied_truss_examples() {
        assert_eq!(implied_truss_cover(&Graph::complete(4), 4), Ok(true));
        assert!(matches!(implied_truss_cover(&k4_minus_edge(), 4), Err(CoverError::MissingCover { k: 4, .. })));
        assert_eq!(implied_truss_cover(&bowtie(), 3), Ok(true));
    }

    #[test]
    fn vertex_condition() {
        assert!(every_vertex_in_clique(Graph::complete(3).rows(), 3));
        assert!(!every_vertex_in_clique(k4_minus_edge().rows(), 4));
        let mut g = Graph::complete(3);
        g = {
            let mut h = Graph::new(4);
            for e in g.edges() {
                h.add_edge(e.u, e.v);
            }
            h
        };
        assert!(!every_vertex_in_clique(g.rows(), 3));
        assert_eq!(non_isolated(&g), VertexSet::from_slice(&[0, 1, 2]));
    }
}
