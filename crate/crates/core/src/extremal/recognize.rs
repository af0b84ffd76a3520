//! Structural recognition of extremal graphs.
//!
//! A graph is accepted when it is connected, `(k,1)`-covered, has exactly the
//! minimum number of edges, and admits an ordering `C_0, .., C_{q+1}` of
//! `k`-cliques such that
//!
//! 1. the cliques' edges are all of `E(G)`,
//! 2. each `C_j` meets the union of its predecessors in exactly one vertex,
//!    except for at most one step,
//! 3. the exceptional step meets the union in `k − r` vertices, all inside a
//!    single earlier clique.
//!
//! The cheap prefilter already decides extremality by the edge count alone;
//! the ordering is searched independently so that the two can be compared.

use serde::Serialize;

use super::{decompose, min_edges_kcover, Decomposition};
use crate::cover::{has_cover, CoverSpec};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalWitness {
    /// `C_0, .., C_{q+1}` as sorted vertex lists.
    pub cliques: Vec<Vec<usize>>,
    /// `|U_j ∩ (U_0 ∪ .. ∪ U_{j−1})|` for `j = 1..=q+1`.
    pub intersections: Vec<usize>,
    /// The step whose intersection is `k − r > 1`, if any.
    pub exceptional: Option<usize>,
    /// An earlier clique containing the exceptional intersection.
    pub partner: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "code")]
pub enum RejectReason {
    CliqueOrderTooSmall,
    TooFewVertices,
    Disconnected,
    NoCover,
    EdgeCount { expected: usize, found: usize },
    NoWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub extremal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<RejectReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExtremalWitness>,
}

impl Recognition {
    fn reject(reason: RejectReason) -> Self {
        Recognition { extremal: false, reason: Some(reason), witness: None }
    }
}

pub fn recognize_extremal(g: &Graph, k: usize) -> Recognition {
    if k < 3 {
        return Recognition::reject(RejectReason::CliqueOrderTooSmall);
    }
    let n = g.vertex_count();
    if n < k {
        return Recognition::reject(RejectReason::TooFewVertices);
    }
    if !g.is_connected() {
        return Recognition::reject(RejectReason::Disconnected);
    }
    if !has_cover(g, CoverSpec::new(k, 1).expect("k >= 3")).holds {
        return Recognition::reject(RejectReason::NoCover);
    }
    let expected = min_edges_kcover(n, k).expect("n >= k >= 3");
    if g.edge_count() != expected {
        return Recognition::reject(RejectReason::EdgeCount { expected, found: g.edge_count() });
    }
    match find_witness(g, k) {
        Some(w) => Recognition { extremal: true, reason: None, witness: Some(w) },
        None => Recognition::reject(RejectReason::NoWitness),
    }
}

/// Searches for a clique ordering with the three properties above, trying
/// cliques in lexicographic order and returning the first success. Does not
/// look at the edge count.
pub fn find_witness(g: &Graph, k: usize) -> Option<ExtremalWitness> {
    let n = g.vertex_count();
    if k < 3 || n < k {
        return None;
    }
    if n == k {
        return (g.edge_count() == k * (k - 1) / 2).then(|| ExtremalWitness {
            cliques: vec![(0..k).collect()],
            intersections: vec![],
            exceptional: None,
            partner: None,
        });
    }
    let Decomposition { q, r } = decompose(n, k).ok()?;
    let cliques = g.cliques(k);
    let mut search = WitnessSearch {
        g,
        cliques: &cliques,
        steps: q + 2,
        overlap: k - r,
        chosen: Vec::new(),
        intersections: Vec::new(),
        exceptional: None,
    };
    for (i, &c0) in cliques.iter().enumerate() {
        search.chosen.push(i);
        if search.extend(c0, clique_rows(g.vertex_count(), c0)) {
            let (exceptional, partner) = search.exceptional.unzip();
            return Some(ExtremalWitness {
                cliques: search.chosen.iter().map(|&c| cliques[c].to_vec()).collect(),
                intersections: search.intersections,
                exceptional,
                partner,
            });
        }
        search.chosen.pop();
    }
    None
}

struct WitnessSearch<'a> {
    g: &'a Graph,
    cliques: &'a [VertexSet],
    steps: usize,
    overlap: usize,
    chosen: Vec<usize>,
    intersections: Vec<usize>,
    exceptional: Option<(usize, usize)>,
}

impl WitnessSearch<'_> {
    fn extend(&mut self, union: VertexSet, covered: Vec<u64>) -> bool {
        if self.chosen.len() == self.steps {
            return union == self.g.vertices() && covered == self.g.rows();
        }
        let step = self.chosen.len();
        for (ci, &c) in self.cliques.iter().enumerate() {
            if self.chosen.contains(&ci) {
                continue;
            }
            let meet = c.intersection(union);
            let size = meet.len();
            let exceptional = if size == 1 {
                None
            } else if size == self.overlap && self.exceptional.is_none() {
                match self.chosen.iter().position(|&p| meet.is_subset(self.cliques[p])) {
                    Some(partner) => Some((step, partner)),
                    None => continue,
                }
            } else {
                continue;
            };
            let mut next = covered.clone();
            for v in c {
                next[v] |= c.0 & !(1u64 << v);
            }
            self.chosen.push(ci);
            self.intersections.push(size);
            if exceptional.is_some() {
                self.exceptional = exceptional;
            }
            if self.extend(union.union(c), next) {
                return true;
            }
            if exceptional.is_some() {
                self.exceptional = None;
            }
            self.intersections.pop();
            self.chosen.pop();
        }
        false
    }
}

fn clique_rows(n: usize, c: VertexSet) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for v in c {
        rows[v] = c.0 & !(1u64 << v);
    }
    rows
}
