//! Building members of the extremal family and listing all of them.

use std::collections::BTreeMap;

use super::hypertree::{build_gtree, HypertreeSpec, Template};
use super::{decompose, Decomposition, ExtremalError};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

/// Arrangement of the blocks in [`build_extremal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Each block hangs off a fresh vertex of the previous one.
    Path,
    /// Every block is glued at vertex 0.
    Star,
}

impl std::str::FromStr for Shape {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(Shape::Path),
            "star" => Ok(Shape::Star),
            other => Err(format!("unknown shape `{other}` (expected path or star)")),
        }
    }
}

/// Blocks of the extremal family for `(n, k)`: `q` cliques and one lens
/// `L(k, r)`, with the lens split into two cliques when `r = k − 1`.
fn extremal_templates(n: usize, k: usize) -> Result<(Template, usize), ExtremalError> {
    let Decomposition { q, r } = decompose(n, k)?;
    Ok(if r == k - 1 {
        (Template::Clique { k }, q + 1)
    } else {
        (Template::Lens { k, r }, q)
    })
}

/// Hypertree spec of the graph [`build_extremal`] returns.
pub fn extremal_spec(n: usize, k: usize, shape: Shape) -> Result<HypertreeSpec, ExtremalError> {
    let (root, cliques) = extremal_templates(n, k)?;
    let mut spec = HypertreeSpec::new(root);
    let mut last_vertex = root.vertex_count() - 1;
    for i in 0..cliques {
        spec = match shape {
            Shape::Star => spec.attach(Template::Clique { k }, 0, 0, 0),
            Shape::Path => spec.attach(Template::Clique { k }, i, last_vertex, 0),
        };
        // the newest block's fresh vertices occupy the top ids
        last_vertex = spec.vertex_count() - 1;
    }
    Ok(spec)
}

/// A connected `n`-vertex graph with a `(k,1)`-cover and the minimum number
/// of edges.
pub fn build_extremal(n: usize, k: usize, shape: Shape) -> Result<Graph, ExtremalError> {
    build_gtree(&extremal_spec(n, k, shape)?)
}

/// Every member of the extremal family on `n` vertices, up to isomorphism,
/// as canonical representatives sorted by canonical form.
pub fn enumerate_extremal(n: usize, k: usize) -> Result<Vec<Graph>, ExtremalError> {
    enumerate_extremal_capped(n, k, DEFAULT_ENUMERATION_CAP)
}

/// Starts from the root block (the lens, or a clique when the lens splits)
/// and glues one clique at a time onto every vertex, deduplicating by
/// canonical form after each round. Any hypertree can be rooted at its lens
/// and all clique blocks are interchangeable, so this reaches every member.
pub fn enumerate_extremal_capped(n: usize, k: usize, cap: usize) -> Result<Vec<Graph>, ExtremalError> {
    let (root, cliques) = extremal_templates(n, k)?;
    let canon = |g: &Graph| canonical_form(g).map_err(|e| ExtremalError::TooLarge(e.0));
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let root_graph = root.graph();
    level.insert(canon(&root_graph)?, root_graph);
    for _ in 0..cliques {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 0..g.vertex_count() {
                let h = glue_clique(g, v, k);
                next.entry(canon(&h)?).or_insert(h);
                if next.len() > cap {
                    return Err(ExtremalError::CapExceeded { cap, found: next.len() });
                }
            }
        }
        level = next;
    }
    Ok(level.into_keys().map(|f| f.to_graph()).collect())
}

fn glue_clique(g: &Graph, at: usize, k: usize) -> Graph {
    let n = g.vertex_count();
    let mut h = Graph::new(n + k - 1);
    for e in g.edges() {
        h.add_edge(e.u, e.v);
    }
    let members: Vec<usize> = std::iter::once(at).chain(n..n + k - 1).collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            h.add_edge(a, b);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{has_cover, CoverSpec};
    use crate::extremal::min_edges_kcover;

    #[test]
    fn small_builds() {
        let g = build_extremal(5, 3, Shape::Path).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        let g = build_extremal(4, 3, Shape::Path).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
        assert!(build_extremal(4, 4, Shape::Star).is_err());
    }

    #[test]
    fn builds_are_minimal_covered_and_connected() {
        for k in 3..=6 {
            for n in k + 1..=k + 14 {
                for shape in [Shape::Path, Shape::Star] {
                    let g = build_extremal(n, k, shape).unwrap();
                    assert_eq!(g.vertex_count(), n);
                    assert_eq!(g.edge_count(), min_edges_kcover(n, k).unwrap(), "n={n} k={k}");
                    assert!(g.is_connected());
                    assert!(has_cover(&g, CoverSpec::new(k, 1).unwrap()).holds);
                }
            }
        }
    }

    #[test]
    fn path_and_star_differ_once_there_are_three_blocks() {
        let a = canonical_form(&build_extremal(9, 3, Shape::Path).unwrap()).unwrap();
        let b = canonical_form(&build_extremal(9, 3, Shape::Star).unwrap()).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn enumeration_examples() {
        let one = enumerate_extremal(4, 3).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].edge_count(), 5);
        let bowtie = enumerate_extremal(5, 3).unwrap();
        assert_eq!(bowtie.len(), 1);
        assert_eq!(bowtie[0].edge_count(), 6);
        // three triangles in a tree: path-like or all at one vertex
        assert_eq!(enumerate_extremal(7, 3).unwrap().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_extremal_capped(11, 3, 3), Err(ExtremalError::CapExceeded { cap: 3, .. })));
    }
}
