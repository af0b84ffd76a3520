//! Canonical forms for isomorphism rejection.
//!
//! The form of a graph is the lexicographically least graph6 bit string
//! (upper triangle, column by column) over all vertex orderings that list
//! vertices by ascending color-refinement class. Color refinement is
//! isomorphism-invariant, so two graphs get the same form exactly when they
//! are isomorphic. The search backtracks position by position, cuts any
//! branch whose bit prefix already exceeds the best string, and tries only
//! one vertex from each set of interchangeable twins.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::format::graph6;
use crate::graph::{Graph, VertexSet};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical forms are limited to {MAX_CANONICAL_VERTICES} vertices, got {0}")]
pub struct UnsupportedSize(pub usize);

/// Isomorphism-invariant label of a graph. Ordered by vertex count, then
/// by the canonical bit string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    /// The canonically labeled representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * (n.saturating_sub(1)) / 2;
        let mut g = Graph::new(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - t) & 1 == 1 {
                    g.add_edge(i, j);
                }
                t += 1;
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// graph6 text of the canonical representative.
    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, UnsupportedSize> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(UnsupportedSize(n));
    }
    if n <= 1 {
        return Ok(CanonicalForm { n: n as u8, bits: 0 });
    }
    let colors = refine_colors(g);
    // position p may only hold a vertex of color cell_of[p]
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let cell_of: Vec<usize> = order.iter().map(|&v| colors[v]).collect();
    let mut by_color = vec![VertexSet::EMPTY; n];
    for v in 0..n {
        by_color[colors[v]].insert(v);
    }

    let total = n * (n - 1) / 2;
    let mut search = Search {
        rows: g.rows(),
        n,
        total,
        cell_of,
        by_color,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, VertexSet::EMPTY);
    Ok(CanonicalForm { n: n as u8, bits: search.best.expect("at least one ordering") })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, UnsupportedSize> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    total: usize,
    cell_of: Vec<usize>,
    by_color: Vec<VertexSet>,
    placed: Vec<usize>,
    best: Option<u128>,
}

impl Search<'_> {
    /// `bits` holds the string for positions `0..pos`, left-aligned in a
    /// `total`-bit word.
    fn run(&mut self, pos: usize, bits: u128, used: VertexSet) {
        if pos == self.n {
            if self.best.is_none_or(|b| bits < b) {
                self.best = Some(bits);
            }
            return;
        }
        // bits written so far: pos*(pos-1)/2; this position adds `pos` more
        let done = pos * pos.saturating_sub(1) / 2;
        let after = done + pos;
        let cand = self.by_color[self.cell_of[pos]].difference(used);
        let mut tried_twins = VertexSet::EMPTY;
        for v in cand {
            if tried_twins.contains(v) {
                continue;
            }
            // twins of v among the remaining candidates give identical subtrees
            for w in cand {
                if w != v && self.twins(v, w) {
                    tried_twins.insert(w);
                }
            }
            let mut next = bits;
            let row = self.rows[v];
            for (i, &p) in self.placed.iter().enumerate() {
                if row >> p & 1 == 1 {
                    next |= 1u128 << (self.total - 1 - (done + i));
                }
            }
            if let Some(best) = self.best {
                let shift = self.total - after;
                if (next >> shift) > (best >> shift) {
                    continue;
                }
            }
            self.placed.push(v);
            let mut u = used;
            u.insert(v);
            self.run(pos + 1, next, u);
            self.placed.pop();
        }
    }

    #[inline]
    fn twins(&self, a: usize, b: usize) -> bool {
        let mask = !((1u64 << a) | (1u64 << b));
        self.rows[a] & mask == self.rows[b] & mask
    }
}

/// Stable color refinement starting from degrees. Colors are dense ranks
/// `0..c`, assigned by sorting signatures, so they do not depend on labels.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut count = rank(&mut colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let next_count = sorted.len();
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

fn rank(values: &mut [usize]) -> usize {
    let mut distinct: Vec<usize> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for v in values.iter_mut() {
        *v = distinct.binary_search(v).unwrap();
    }
    distinct.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full permutation scan; exponential but independent of the pruning.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(k: usize, perm: &mut Vec<usize>, a: &Graph, b: &Graph) -> bool {
            if k == perm.len() {
                return a.permute(perm) == *b;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if rec(k + 1, perm, a, b) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(0, &mut perm, a, b)
    }

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                Graph::from_edges(n, &edges)
            })
            .collect()
    }

    #[test]
    fn paths_relabeled_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn k4_and_k4_minus_edge_differ() {
        let mut m = Graph::complete(4);
        m.remove_edge(0, 1);
        assert_ne!(canonical_form(&Graph::complete(4)).unwrap(), canonical_form(&m).unwrap());
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let mut forms: Vec<_> = all_labeled(4).iter().map(|g| canonical_form(g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn forms_match_brute_force_isomorphism_on_five_vertices() {
        let graphs = all_labeled(5);
        let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut classes: Vec<usize> = Vec::new();
        for i in 0..graphs.len() {
            if !classes.iter().any(|&c| brute_isomorphic(&graphs[c], &graphs[i])) {
                classes.push(i);
            }
        }
        assert_eq!(classes.len(), 34);
        // pairwise: equal form iff brute-force isomorphic, sampled against class reps
        for (i, g) in graphs.iter().enumerate().step_by(7) {
            for &c in &classes {
                assert_eq!(forms[i] == forms[c], brute_isomorphic(g, &graphs[c]));
            }
        }
    }

    #[test]
    fn representative_round_trips() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 5), (5, 1), (2, 4)]);
        let f = canonical_form(&g).unwrap();
        let rep = f.to_graph();
        assert_eq!(canonical_form(&rep).unwrap(), f);
        assert!(brute_isomorphic(&g, &rep));
    }

    #[test]
    fn size_cap() {
        assert_eq!(canonical_form(&Graph::new(17)), Err(UnsupportedSize(17)));
        assert!(canonical_form(&Graph::complete(16)).is_ok());
    }
}
