//! Undirected simple graphs on at most 64 vertices with one `u64` adjacency
//! row per vertex.
//!
//! Every triangle and clique query reduces to intersections of neighbor rows,
//! which is what the rest of the crate leans on in its hot loops.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {{{u},{v}}} is not an edge of the graph")]
    InvalidEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("clique order must be at least 2, got {0}")]
    CliqueOrder(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_slice(vertices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in vertices {
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge with normalized endpoints `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet((1u64 << self.u) | (1u64 << self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Invariants: adjacency is symmetric, there are no self-loops, and every
/// neighbor index is below `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count exceeds MAX_VERTICES")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    /// Builds a graph from an edge list; panics on invalid pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::try_from_edges(n, edges).expect("invalid edge list")
    }

    pub fn try_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::try_new(n)?;
        for &(a, b) in edges {
            g.try_add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, repairing nothing: rows must
    /// already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.try_add_edge(a, b).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        for x in [a, b] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.n && b < self.n {
            self.adj[a] &= !(1u64 << b);
            self.adj[b] &= !(1u64 << a);
        }
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            let higher = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            VertexSet(higher).iter().map(move |v| Edge { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    /// Makes `e` an edge of this graph or reports why it is not one.
    pub fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(GraphError::InvalidEdge { u: e.u, v: e.v })
        }
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet(1u64 << v)).is_subset(self.neighbors(v)))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut mapped = 0u64;
            for w in VertexSet(row) {
                mapped |= 1u64 << perm[w];
            }
            adj[perm[v]] = mapped;
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, renumbered in increasing order. The second
    /// value maps new vertex ids back to ids in `self`.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_id = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| {
                (self.neighbors(v).intersection(keep))
                    .iter()
                    .fold(0u64, |acc, w| acc | 1u64 << new_id[w])
            })
            .collect();
        (Graph { n: old.len(), adj }, old)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = self.vertices();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// True iff the graph has exactly one component. The graphs on zero and
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertices()
    }

    /// `T_G(uv)`: the vertices forming a triangle with the edge `e`.
    pub fn triangle_vertices(&self, e: Edge) -> Result<VertexSet, GraphError> {
        self.check_edge(e)?;
        Ok(VertexSet(self.adj[e.u] & self.adj[e.v]))
    }

    /// All `k`-cliques containing `e`, sorted lexicographically by their
    /// sorted vertex lists.
    pub fn cliques_containing_edge(&self, e: Edge, k: usize) -> Result<Vec<VertexSet>, GraphError> {
        if k < 2 {
            return Err(GraphError::CliqueOrder(k));
        }
        self.check_edge(e)?;
        let mut out = Vec::new();
        let common = self.adj[e.u] & self.adj[e.v];
        extend_cliques(&self.adj, common, k - 2, e.endpoints().0, &mut |c| {
            out.push(VertexSet(c));
            true
        });
        out.sort_by_key(|c| c.to_vec());
        Ok(out)
    }

    /// Number of `k`-cliques containing `e`, stopping once `limit` is reached.
    pub fn count_cliques_containing_edge(&self, e: Edge, k: usize, limit: usize) -> usize {
        debug_assert!(k >= 2);
        count_cliques_through(&self.adj, e.u, e.v, k, limit)
    }

    /// All `k`-cliques of the graph in lexicographic order.
    pub fn cliques(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if k == 0 {
            return vec![VertexSet::EMPTY];
        }
        // Vertex-by-vertex extension in increasing order yields lex order.
        fn rec(adj: &[u64], cand: u64, need: usize, cur: u64, out: &mut Vec<VertexSet>) {
            if need == 0 {
                out.push(VertexSet(cur));
                return;
            }
            let mut c = cand;
            while c != 0 {
                if (c.count_ones() as usize) < need {
                    return;
                }
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                rec(adj, c & adj[v], need - 1, cur | 1u64 << v, out);
            }
        }
        rec(&self.adj, self.vertices().0, k, 0, &mut out);
        out
    }

    /// Contracts `e`, identifying its endpoints and merging parallel edges.
    ///
    /// The merged vertex keeps the smaller endpoint's index; vertices above the
    /// larger endpoint shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, ContractionMap), GraphError> {
        self.check_edge(e)?;
        let map = ContractionMap::new(self.n, e);
        let mut out = Graph::new(self.n - 1);
        for f in self.edges().filter(|&f| f != e) {
            let (a, b) = (map.apply(f.u), map.apply(f.v));
            if a != b {
                out.add_edge(a, b);
            }
        }
        Ok((out, map))
    }

    /// `K_{2m}` minus a perfect matching: parts `{2i, 2i+1}`, every
    /// non-partner pair adjacent.
    pub fn complete_multipartite_pairs(m: usize) -> Graph {
        let n = 2 * m;
        let mut g = Graph::complete(n);
        for i in 0..m {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// Graphviz rendering with plain vertex ids.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for v in 0..self.n {
            if self.adj[v] == 0 {
                s.push_str(&format!("  {v};\n"));
            }
        }
        for e in self.edges() {
            s.push_str(&format!("  {} -- {};\n", e.u, e.v));
        }
        s.push_str("}\n");
        s
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let all = VertexSet::full(self.n).0;
        self.adj.iter().enumerate().all(|(u, &row)| {
            row & !all == 0
                && row >> u & 1 == 0
                && VertexSet(row).iter().all(|v| self.adj[v] >> u & 1 == 1)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

/// Calls `f` with every clique `cur ∪ S` where `S ⊆ cand` is a clique of
/// size `need`, in increasing-vertex extension order. Stops when `f` returns
/// false; the return value reports whether enumeration ran to completion.
pub(crate) fn extend_cliques(
    adj: &[u64],
    cand: u64,
    need: usize,
    cur: u64,
    f: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if need == 0 {
        return f(cur);
    }
    let mut c = cand;
    while c != 0 {
        if (c.count_ones() as usize) < need {
            return true;
        }
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if !extend_cliques(adj, c & adj[v], need - 1, cur | 1u64 << v, f) {
            return false;
        }
    }
    true
}

/// Counts `k`-cliques through the edge `uv` up to `limit`.
#[inline]
pub(crate) fn count_cliques_through(adj: &[u64], u: usize, v: usize, k: usize, limit: usize) -> usize {
    let common = adj[u] & adj[v];
    match k {
        2 => 1.min(limit),
        3 => (common.count_ones() as usize).min(limit),
        _ => {
            let mut count = 0;
            if limit == 0 {
                return 0;
            }
            extend_cliques(adj, common, k - 2, 0, &mut |_| {
                count += 1;
                count < limit
            });
            count
        }
    }
}

/// The vertex map `f` of an edge contraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionMap {
    pub source_n: usize,
    pub target_n: usize,
    /// The contracted pair `(u, v)` with `u < v`.
    pub merged: (usize, usize),
    /// Index of the merged vertex `u_v` in the target graph.
    pub image: usize,
    map: Vec<usize>,
}

impl ContractionMap {
    fn new(source_n: usize, e: Edge) -> Self {
        let map = (0..source_n)
            .map(|x| match x {
                x if x == e.v => e.u,
                x if x > e.v => x - 1,
                x => x,
            })
            .collect();
        ContractionMap { source_n, target_n: source_n - 1, merged: (e.u, e.v), image: e.u, map }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components().len(), 2);
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(!Graph::new(2).is_connected());
    }

    #[test]
    fn triangle_vertices_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.triangle_vertices(e(0, 1)).unwrap(), VertexSet::from_slice(&[2, 3]));
        let tri = Graph::complete(3);
        assert_eq!(tri.triangle_vertices(e(0, 1)).unwrap(), VertexSet::from_slice(&[2]));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(path.triangle_vertices(e(0, 1)).unwrap().is_empty());
        assert_eq!(path.triangle_vertices(e(0, 2)), Err(GraphError::InvalidEdge { u: 0, v: 2 }));
    }

    #[test]
    fn cliques_containing_edge_examples() {
        let k5 = Graph::complete(5);
        let got: Vec<Vec<usize>> = k5.cliques_containing_edge(e(0, 1), 3).unwrap().iter().map(|c| c.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);

        let mut k4_minus = Graph::complete(4);
        k4_minus.remove_edge(2, 3);
        for f in k4_minus.edges() {
            assert!(k4_minus.cliques_containing_edge(f, 4).unwrap().is_empty());
        }

        let oct = Graph::complete_multipartite_pairs(3);
        for f in oct.edges() {
            assert_eq!(oct.cliques_containing_edge(f, 3).unwrap().len(), 2);
        }
        assert_eq!(k5.cliques_containing_edge(e(0, 1), 1), Err(GraphError::CliqueOrder(1)));
        assert!(oct.cliques_containing_edge(e(0, 1), 3).is_err());
    }

    #[test]
    fn clique_order_is_lexicographic_for_non_adjacent_ids() {
        // edge {1,5}; extras 0 and 2 must give [0,1,5] before [1,2,5]
        let g = Graph::from_edges(6, &[(1, 5), (0, 1), (0, 5), (2, 1), (2, 5), (3, 1), (3, 5)]);
        let got: Vec<Vec<usize>> = g.cliques_containing_edge(e(1, 5), 3).unwrap().iter().map(|c| c.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 5], vec![1, 2, 5], vec![1, 3, 5]]);
    }

    #[test]
    fn contraction_examples() {
        let (g, map) = Graph::complete(3).contract_edge(e(0, 2)).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(map.as_slice(), &[0, 1, 0]);

        let (g, _) = Graph::complete(4).contract_edge(e(1, 2)).unwrap();
        assert_eq!(g, Graph::complete(3));

        let oct = Graph::complete_multipartite_pairs(3);
        let (g, map) = oct.contract_edge(e(0, 2)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(map.image, 0);
        assert_eq!(map.apply(5), 4);
        // the only missing pair is between the two former common neighbors
        let missing: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b)).collect();
        assert_eq!(missing.len(), 1);
    }

    #[test]
    fn contraction_map_is_surjective_with_one_collision() {
        let g = Graph::complete(6);
        let (_, map) = g.contract_edge(e(2, 4)).unwrap();
        let mut hits = vec![0; 5];
        for x in 0..6 {
            hits[map.apply(x)] += 1;
        }
        assert_eq!(hits, vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn multipartite_pairs() {
        assert_eq!(Graph::complete_multipartite_pairs(1).edge_count(), 0);
        assert_eq!(Graph::complete_multipartite_pairs(3).edge_count(), 12);
        let g = Graph::complete_multipartite_pairs(5);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 40));
        for m in 2..8 {
            let g = Graph::complete_multipartite_pairs(m);
            assert!((0..2 * m).all(|v| g.degree(v) == 2 * m - 2));
            for f in g.edges() {
                assert_eq!(g.triangle_vertices(f).unwrap().len(), 2 * m - 4);
            }
        }
    }

    #[test]
    fn all_cliques_in_lex_order() {
        let cl: Vec<Vec<usize>> = Graph::complete(4).cliques(3).iter().map(|c| c.to_vec()).collect();
        assert_eq!(cl, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        assert_eq!(g.to_dot(), "graph {\n  2;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn induced() {
        let g = Graph::complete(5);
        let (h, back) = g.induced_subgraph(VertexSet::from_slice(&[1, 3, 4]));
        assert_eq!(h, Graph::complete(3));
        assert_eq!(back, vec![1, 3, 4]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::try_new(65), Err(GraphError::TooLarge(65)));
        let mut g = Graph::new(3);
        assert_eq!(g.try_add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(g.try_add_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(Edge::new(2, 2).is_err());
        assert_eq!(Edge::new(5, 1).unwrap(), Edge { u: 1, v: 5 });
    }
}
