//! Clique peeling with a per-instance edge-count certificate.
//!
//! Starting from one `K_k`, each step takes an edge `u_j v_j` with `u_j`
//! still unvisited and `v_j` already visited, picks a `K_k` through it, and
//! marks its vertices visited. With `x_j` the number of already-visited
//! vertices in that clique, the step removes at least `C(k,2) − C(x_j,2)`
//! edges that no earlier clique used, so
//!
//! ```text
//! |E| ≥ C(k,2) + Σ_j (C(k,2) − C(x_j,2))
//! ```
//!
//! for whatever choices were made. The trace records every choice so the
//! bound can be checked without trusting the code that produced it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{has_cover, CoverSpec};
use crate::extremal::{choose2, decompose, min_edges_kcover};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShrinkError {
    #[error("clique order must be at least 3, got {0}")]
    CliqueOrder(usize),
    #[error("graph has {n} vertices, fewer than k = {k}")]
    TooFewVertices { n: usize, k: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no ({k},1)-cover")]
    NoCover { k: usize },
}

/// How each step resolves the free choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    /// Lexicographically first crossing edge and first clique through it.
    #[default]
    Lex,
    /// Lexicographically first crossing edge; the clique through it with the
    /// most visited vertices (ties broken lexicographically).
    MaxOverlap,
}

impl std::str::FromStr for Policy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(Policy::Lex),
            "max_overlap" | "max-overlap" => Ok(Policy::MaxOverlap),
            other => Err(format!("unknown policy `{other}` (expected lex or max_overlap)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkStep {
    /// `[u_j, v_j]`: `u_j` unvisited before the step, `v_j` visited.
    pub e: [usize; 2],
    pub clique: Vec<usize>,
    /// Visited vertices of `clique` before the step, in `1..k`.
    pub x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkTrace {
    pub k: usize,
    pub c0: Vec<usize>,
    pub steps: Vec<ShrinkStep>,
    pub bound: usize,
}

impl ShrinkTrace {
    /// Number of loop iterations.
    pub fn iterations(&self) -> usize {
        self.steps.len()
    }

    /// Recomputes the certified bound from the recorded `x_j`.
    pub fn recomputed_bound(&self) -> usize {
        certified_bound(self.k, self.steps.iter().map(|s| s.x))
    }

    /// Checks `Σ (x_j − 1) = (I − q)(k − 1) − r` for an `n`-vertex input. For
    /// `n = k` the loop never runs and the identity degenerates to `I = 0`.
    pub fn sum_identity_holds(&self, n: usize) -> bool {
        let lhs: i64 = self.steps.iter().map(|s| s.x as i64 - 1).sum();
        let i = self.steps.len() as i64;
        match decompose(n, self.k) {
            Ok(d) => lhs == (i - d.q as i64) * (self.k as i64 - 1) - d.r as i64,
            Err(_) => n == self.k && i == 0,
        }
    }
}

fn certified_bound(k: usize, xs: impl Iterator<Item = usize>) -> usize {
    let per = choose2(k);
    per + xs.map(|x| per - choose2(x)).sum::<usize>()
}

/// Runs the peeling on a connected graph with a `(k,1)`-cover.
///
/// The resulting bound satisfies `min_edges_kcover(n, k) ≤ bound ≤ |E|`.
pub fn run_procedure(g: &Graph, k: usize, policy: Policy) -> Result<ShrinkTrace, ShrinkError> {
    if k < 3 {
        return Err(ShrinkError::CliqueOrder(k));
    }
    let n = g.vertex_count();
    if n < k {
        return Err(ShrinkError::TooFewVertices { n, k });
    }
    if !g.is_connected() {
        return Err(ShrinkError::Disconnected);
    }
    if !has_cover(g, CoverSpec::new(k, 1).expect("k >= 3")).holds {
        return Err(ShrinkError::NoCover { k });
    }
    let c0 = *g.cliques(k).first().ok_or(ShrinkError::NoCover { k })?;
    let mut visited = c0;
    let mut steps = Vec::new();
    while visited != g.vertices() {
        // lex-least (v_j, u_j): visited endpoint first
        let (v, u) = visited
            .iter()
            .find_map(|v| g.neighbors(v).difference(visited).first().map(|u| (v, u)))
            .expect("connected graph always has a crossing edge");
        let edge = crate::graph::Edge::new(u, v).expect("distinct");
        let through = g.cliques_containing_edge(edge, k).expect("edge exists");
        let pick = match policy {
            Policy::Lex => through.first(),
            // max_by_key keeps the last maximum; iterate in reverse for the first
            Policy::MaxOverlap => through.iter().rev().max_by_key(|c| c.intersection(visited).len()),
        }
        .copied()
        .ok_or(ShrinkError::NoCover { k })?;
        steps.push(ShrinkStep { e: [u, v], clique: pick.to_vec(), x: pick.intersection(visited).len() });
        visited = visited.union(pick);
    }
    let bound = certified_bound(k, steps.iter().map(|s| s.x));
    debug_assert!(bound <= g.edge_count());
    debug_assert!(min_edges_kcover(n, k).is_ok_and(|f| f <= bound));
    Ok(ShrinkTrace { k, c0: c0.to_vec(), steps, bound })
}

/// Result of replaying a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TraceVerdict {
    Valid,
    /// `step` is 0 for `C_0`, `j` for loop step `j`, and `I + 1` for checks
    /// on the finished run.
    Invalid { step: usize, reason: String },
}

impl TraceVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TraceVerdict::Valid)
    }
}

/// Replays `t` against `g` with plain set arithmetic, materializing the
/// unused edge sets `E_j` that [`run_procedure`] never builds.
pub fn verify_trace(g: &Graph, t: &ShrinkTrace) -> TraceVerdict {
    let bad = |step: usize, reason: String| TraceVerdict::Invalid { step, reason };
    let n = g.vertex_count();
    let k = t.k;
    let as_set = |vs: &[usize]| -> Option<VertexSet> {
        let s: VertexSet = vs.iter().copied().filter(|&v| v < n).collect();
        (vs.iter().all(|&v| v < n) && s.len() == vs.len()).then_some(s)
    };
    let Some(c0) = as_set(&t.c0) else {
        return bad(0, "C_0 names an invalid or repeated vertex".into());
    };
    if c0.len() != k || !g.is_clique(c0) {
        return bad(0, format!("C_0 = {c0} is not a {k}-clique"));
    }
    // unused edges E_j, as a symmetric adjacency matrix
    let mut unused: Vec<u64> = g.rows().to_vec();
    let remove = |c: VertexSet, unused: &mut Vec<u64>| -> usize {
        let mut removed = 0;
        for a in c {
            removed += (unused[a] & c.0).count_ones() as usize;
            unused[a] &= !c.0;
        }
        removed / 2
    };
    let mut removed_total = remove(c0, &mut unused);
    let mut visited = c0;
    for (idx, s) in t.steps.iter().enumerate() {
        let j = idx + 1;
        let [u, v] = s.e;
        if u >= n || v >= n || !g.has_edge(u, v) {
            return bad(j, format!("e_{j} = {{{u},{v}}} is not an edge"));
        }
        if visited.contains(u) || !visited.contains(v) {
            return bad(j, format!("e_{j} does not cross from unvisited {u} to visited {v}"));
        }
        if unused[u] >> v & 1 == 0 {
            return bad(j, format!("e_{j} was already used by an earlier clique"));
        }
        let Some(c) = as_set(&s.clique) else {
            return bad(j, format!("C_{j} names an invalid or repeated vertex"));
        };
        if c.len() != k || !g.is_clique(c) {
            return bad(j, format!("C_{j} = {c} is not a {k}-clique"));
        }
        if !c.contains(u) || !c.contains(v) {
            return bad(j, format!("C_{j} = {c} does not contain e_{j}"));
        }
        let x = c.intersection(visited).len();
        if x != s.x {
            return bad(j, format!("x_{j} recorded as {} but C_{j} has {x} visited vertices", s.x));
        }
        if !(1..k).contains(&x) {
            return bad(j, format!("x_{j} = {x} outside 1..{k}"));
        }
        let dropped = remove(c, &mut unused);
        if dropped < choose2(k) - choose2(x) {
            return bad(j, format!("step {j} removed {dropped} edges, fewer than C(k,2) - C(x_j,2)"));
        }
        removed_total += dropped;
        visited = visited.union(c);
    }
    let end = t.steps.len() + 1;
    if visited != g.vertices() {
        return bad(end, format!("vertices {} never visited", g.vertices().difference(visited)));
    }
    let recomputed = t.recomputed_bound();
    if recomputed != t.bound {
        return bad(end, format!("bound recorded as {} but recomputes to {recomputed}", t.bound));
    }
    if t.bound > removed_total || removed_total > g.edge_count() {
        return bad(end, format!("bound {} exceeds the {removed_total} edges the cliques account for", t.bound));
    }
    if !t.sum_identity_holds(n) {
        return bad(end, "sum of x_j - 1 disagrees with the vertex count".into());
    }
    TraceVerdict::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_extremal, Shape};

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    }

    #[test]
    fn bowtie_trace() {
        let t = run_procedure(&bowtie(), 3, Policy::Lex).unwrap();
        assert_eq!(t.c0, vec![0, 1, 2]);
        assert_eq!(t.steps, vec![ShrinkStep { e: [3, 2], clique: vec![2, 3, 4], x: 1 }]);
        assert_eq!(t.bound, 6);
        assert!(verify_trace(&bowtie(), &t).is_valid());
    }

    #[test]
    fn k4_with_triangles() {
        let g = Graph::complete(4);
        let t = run_procedure(&g, 3, Policy::Lex).unwrap();
        assert_eq!(t.iterations(), 1);
        assert_eq!(t.steps[0].x, 2);
        assert_eq!(t.bound, 5);
        assert!(t.sum_identity_holds(4));
    }

    #[test]
    fn extremal_star_is_tight_under_both_policies() {
        let g = build_extremal(12, 4, Shape::Star).unwrap();
        for p in [Policy::Lex, Policy::MaxOverlap] {
            let t = run_procedure(&g, 4, p).unwrap();
            assert_eq!(t.bound, 23);
            assert!(verify_trace(&g, &t).is_valid());
        }
    }

    #[test]
    fn max_overlap_prefers_visited_vertices() {
        // C_0 = {0,1,5}; the crossing edge {0,2} lies in {0,2,3} (x = 1) and
        // {0,2,5} (x = 2)
        let g = Graph::from_edges(6, &[(0, 1), (1, 5), (0, 5), (0, 2), (2, 3), (0, 3), (2, 5), (0, 4), (3, 4)]);
        let lex = run_procedure(&g, 3, Policy::Lex).unwrap();
        let max = run_procedure(&g, 3, Policy::MaxOverlap).unwrap();
        assert_eq!(lex.c0, vec![0, 1, 5]);
        assert_eq!((lex.steps[0].clique.clone(), lex.steps[0].x), (vec![0, 2, 3], 1));
        assert_eq!((max.steps[0].clique.clone(), max.steps[0].x), (vec![0, 2, 5], 2));
        assert!(verify_trace(&g, &lex).is_valid());
        assert!(verify_trace(&g, &max).is_valid());
        // greedy overlap is not globally better; both stay in the sandwich
        for t in [&lex, &max] {
            assert!((min_edges_kcover(6, 3).unwrap()..=g.edge_count()).contains(&t.bound));
        }
    }

    #[test]
    fn corrupted_traces_are_rejected() {
        let g = build_extremal(9, 3, Shape::Path).unwrap();
        let t = run_procedure(&g, 3, Policy::Lex).unwrap();
        assert!(verify_trace(&g, &t).is_valid());

        let mut bumped = t.clone();
        bumped.steps[1].x += 1;
        assert!(matches!(verify_trace(&g, &bumped), TraceVerdict::Invalid { step: 2, .. }));

        let mut missing = t.clone();
        let [u, _] = missing.steps[0].e;
        let other: Vec<usize> = (0..9).filter(|w| !missing.steps[0].clique.contains(w)).collect();
        let slot = missing.steps[0].clique.iter().position(|&w| w == u).unwrap();
        missing.steps[0].clique[slot] = other[0];
        assert!(matches!(verify_trace(&g, &missing), TraceVerdict::Invalid { step: 1, .. }));

        let mut short = t.clone();
        short.steps.pop();
        assert!(matches!(verify_trace(&g, &short), TraceVerdict::Invalid { .. }));

        let mut inflated = t;
        inflated.bound += 1;
        assert!(!verify_trace(&g, &inflated).is_valid());
    }

    #[test]
    fn preconditions() {
        assert_eq!(run_procedure(&Graph::complete(3), 4, Policy::Lex), Err(ShrinkError::TooFewVertices { n: 3, k: 4 }));
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(run_procedure(&two, 3, Policy::Lex), Err(ShrinkError::Disconnected));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(run_procedure(&path, 3, Policy::Lex), Err(ShrinkError::NoCover { k: 3 }));
        assert_eq!(run_procedure(&path, 2, Policy::Lex), Err(ShrinkError::CliqueOrder(2)));
    }

    #[test]
    fn trace_json_shape() {
        let t = run_procedure(&bowtie(), 3, Policy::Lex).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v, serde_json::json!({"k": 3, "c0": [0, 1, 2], "steps": [{"e": [3, 2], "clique": [2, 3, 4], "x": 1}], "bound": 6}));
    }
}
