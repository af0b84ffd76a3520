//! Contracting edges that lie in no `K_4` of a `(3,2)`-covered graph.
//!
//! For a connected `(3,2)`-covered graph on more than four vertices,
//! contracting such an edge keeps the graph connected and `(3,2)`-covered,
//! and removes at least three edges. [`contract_and_verify`] checks all of
//! that on every call; a failed conclusion is reported as a
//! [`ReduceError::TheoremViolation`], never silently dropped.

use serde::Serialize;
use thiserror::Error;

use crate::cover::{has_cover, CoverSpec};
use crate::format::graph6;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("precondition failed: {0}")]
    Precondition(Precondition),
    #[error("theorem violation contracting {edge} in {graph6}: {detail}")]
    TheoremViolation { edge: Edge, graph6: String, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} vertices; contraction needs more than 4")]
    TooFewVertices(usize),
    #[error("graph has no (3,2)-cover")]
    NoCover,
    #[error("{0} is not an edge")]
    NotAnEdge(Edge),
    #[error("edge {0} lies in a K_4")]
    EdgeInK4(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub n_before: usize,
    pub edges_before: usize,
    pub edge: Edge,
    /// graph6 text of `G.e`.
    pub graph: String,
    #[serde(skip)]
    pub output: Graph,
    pub n_after: usize,
    pub edges_after: usize,
    pub connected: bool,
    pub cover_32: bool,
    pub edge_drop: usize,
}

fn cover_32() -> CoverSpec {
    CoverSpec::new(3, 2).expect("valid")
}

/// Lexicographically least edge lying in no `K_4`.
pub fn find_edge_not_in_k4(g: &Graph) -> Option<Edge> {
    g.edges().find(|&e| g.count_cliques_containing_edge(e, 4, 1) == 0)
}

/// Contracts `e` after checking every hypothesis, then checks every
/// conclusion.
pub fn contract_and_verify(g: &Graph, e: Edge) -> Result<ContractionReport, ReduceError> {
    let pre = |p| Err(ReduceError::Precondition(p));
    if !g.is_connected() {
        return pre(Precondition::Disconnected);
    }
    if g.vertex_count() <= 4 {
        return pre(Precondition::TooFewVertices(g.vertex_count()));
    }
    if !has_cover(g, cover_32()).holds {
        return pre(Precondition::NoCover);
    }
    if !g.contains_edge(e) {
        return pre(Precondition::NotAnEdge(e));
    }
    if g.count_cliques_containing_edge(e, 4, 1) > 0 {
        return pre(Precondition::EdgeInK4(e));
    }
    let (h, _) = g.contract_edge(e).expect("edge checked");
    let report = ContractionReport {
        n_before: g.vertex_count(),
        edges_before: g.edge_count(),
        edge: e,
        graph: graph6::encode(&h),
        n_after: h.vertex_count(),
        edges_after: h.edge_count(),
        connected: h.is_connected(),
        cover_32: has_cover(&h, cover_32()).holds,
        edge_drop: g.edge_count() - h.edge_count(),
        output: h,
    };
    let mut failures = Vec::new();
    if !report.connected {
        failures.push("result is disconnected".to_string());
    }
    if !report.cover_32 {
        failures.push("result has no (3,2)-cover".to_string());
    }
    if report.edge_drop < 3 {
        failures.push(format!("only {} edges removed", report.edge_drop));
    }
    if report.n_after + 1 != report.n_before {
        failures.push("vertex count did not drop by one".to_string());
    }
    if failures.is_empty() {
        Ok(report)
    } else {
        Err(ReduceError::TheoremViolation { edge: e, graph6: graph6::encode(g), detail: failures.join("; ") })
    }
}

/// Contracts lex-least edges outside every `K_4` until each edge lies in a
/// `K_4` or four vertices remain.
pub fn reduce_to_k4_covered(g: &Graph) -> Result<(Graph, Vec<ContractionReport>), ReduceError> {
    if !g.is_connected() {
        return Err(ReduceError::Precondition(Precondition::Disconnected));
    }
    if !has_cover(g, cover_32()).holds {
        return Err(ReduceError::Precondition(Precondition::NoCover));
    }
    let mut current = g.clone();
    let mut chain = Vec::new();
    while current.vertex_count() > 4 {
        let Some(e) = find_edge_not_in_k4(&current) else { break };
        let report = contract_and_verify(&current, e)?;
        current = report.output.clone();
        chain.push(report);
    }
    Ok((current, chain))
}
