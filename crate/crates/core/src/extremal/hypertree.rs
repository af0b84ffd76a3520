//! Graphs glued from blocks along a linear hypertree.
//!
//! A spec is an ordered block list. Block 0 stands alone; every later block
//! names an earlier block and exactly one vertex of it, which the new block
//! reuses. Sharing one vertex with the structure built so far keeps the block
//! hypergraph linear and acyclic.
//!
//! Text form, one block per line:
//!
//! ```text
//! K 4
//! K 4 @ 0: 0
//! L 4 2 @ 0: 0
//! ```
//!
//! `K k` is a clique, `L k r` two `K_k` sharing `k − r` vertices. A glue entry
//! is a vertex id of the graph built so far; `v=i` glues it to the new block's
//! local vertex `i` (default: the entry's position in the list).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{choose2, ExtremalError};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Template {
    /// `K_k`.
    Clique { k: usize },
    /// Two copies of `K_k` sharing `k − r` vertices. Local vertices
    /// `0..k` form the first copy, `r..k+r` the second, so the shared set is
    /// `r..k`.
    Lens { k: usize, r: usize },
}

impl Template {
    pub fn vertex_count(self) -> usize {
        match self {
            Template::Clique { k } => k,
            Template::Lens { k, r } => k + r,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            Template::Clique { k } => choose2(k),
            Template::Lens { k, r } => 2 * choose2(k) - choose2(k - r),
        }
    }

    /// Edges of the template on local vertices.
    pub fn graph(self) -> Graph {
        match self {
            Template::Clique { k } => Graph::complete(k),
            Template::Lens { k, r } => {
                let mut g = Graph::new(k + r);
                for half in [0..k, r..k + r] {
                    let hv: Vec<usize> = half.collect();
                    for (i, &a) in hv.iter().enumerate() {
                        for &b in &hv[i + 1..] {
                            g.add_edge(a, b);
                        }
                    }
                }
                g
            }
        }
    }

    fn validate(self) -> Result<(), ExtremalError> {
        match self {
            Template::Clique { k } if k >= 2 => Ok(()),
            Template::Lens { k, r } if k >= 3 && (1..k).contains(&r) => Ok(()),
            other => Err(ExtremalError::Spec(format!("invalid template {other}"))),
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Template::Clique { k } => write!(f, "K {k}"),
            Template::Lens { k, r } => write!(f, "L {k} {r}"),
        }
    }
}

/// Where a block attaches: `glue` lists `(existing vertex, local vertex)`
/// pairs; `parent` is the earlier block the existing vertices belong to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub parent: usize,
    pub glue: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub template: Template,
    pub attach: Option<Attachment>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypertreeSpec {
    pub blocks: Vec<Block>,
}

impl HypertreeSpec {
    pub fn new(first: Template) -> Self {
        HypertreeSpec { blocks: vec![Block { template: first, attach: None }] }
    }

    /// Appends a block gluing its local vertex `local` onto `vertex`, which
    /// must belong to block `parent`.
    pub fn attach(mut self, template: Template, parent: usize, vertex: usize, local: usize) -> Self {
        self.blocks.push(Block { template, attach: Some(Attachment { parent, glue: vec![(vertex, local)] }) });
        self
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.blocks.iter().map(|b| b.template.vertex_count() - 1).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.blocks.iter().map(|b| b.template.edge_count()).sum()
    }
}

impl fmt::Display for HypertreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{}", b.template)?;
            if let Some(a) = &b.attach {
                let glue: Vec<String> = a.glue.iter().map(|(v, l)| format!("{v}={l}")).collect();
                write!(f, " @ {}: {}", a.parent, glue.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for HypertreeSpec {
    type Err = ExtremalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut blocks = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| ExtremalError::Spec(format!("line {}: {m}", i + 1));
            let (head, attach) = match line.split_once('@') {
                Some((h, a)) => (h.trim(), Some(a.trim())),
                None => (line, None),
            };
            let parts: Vec<&str> = head.split_whitespace().collect();
            let num = |t: &str| t.parse::<usize>().map_err(|_| bad(&format!("bad number `{t}`")));
            let template = match parts[..] {
                ["K", k] => Template::Clique { k: num(k)? },
                ["L", k, r] => Template::Lens { k: num(k)?, r: num(r)? },
                _ => return Err(bad("expected `K k` or `L k r`")),
            };
            let attach = attach
                .map(|a| {
                    let (parent, list) = a.split_once(':').ok_or_else(|| bad("expected `@ block: v,...`"))?;
                    let parent = num(parent.trim())?;
                    let glue = list
                        .split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .enumerate()
                        .map(|(pos, t)| match t.split_once('=') {
                            Some((v, l)) => Ok((num(v.trim())?, num(l.trim())?)),
                            None => Ok((num(t)?, pos)),
                        })
                        .collect::<Result<Vec<_>, ExtremalError>>()?;
                    Ok::<_, ExtremalError>(Attachment { parent, glue })
                })
                .transpose()?;
            blocks.push(Block { template, attach });
        }
        Ok(HypertreeSpec { blocks })
    }
}

/// Glues the blocks of `spec` into one graph.
///
/// Blocks are laid out in order; a block's non-glued local vertices receive
/// fresh ids in local order. The result has `1 + Σ(|E_i| − 1)` vertices and
/// `Σ |E(F_i)|` edges.
pub fn build_gtree(spec: &HypertreeSpec) -> Result<Graph, ExtremalError> {
    let (g, _) = build_with_blocks(spec)?;
    Ok(g)
}

/// Like [`build_gtree`], also returning each block's vertex set.
pub(crate) fn build_with_blocks(spec: &HypertreeSpec) -> Result<(Graph, Vec<VertexSet>), ExtremalError> {
    let err = |m: String| Err(ExtremalError::Spec(m));
    if spec.blocks.is_empty() {
        return err("no blocks".into());
    }
    let n = spec.vertex_count();
    if n > MAX_VERTICES {
        return err(format!("{n} vertices exceeds the limit of {MAX_VERTICES}"));
    }
    let mut g = Graph::new(n);
    let mut next = 0usize;
    let mut block_sets: Vec<VertexSet> = Vec::with_capacity(spec.blocks.len());
    for (bi, block) in spec.blocks.iter().enumerate() {
        block.template.validate()?;
        let size = block.template.vertex_count();
        let mut ids = vec![usize::MAX; size];
        match (&block.attach, bi) {
            (None, 0) => {}
            (Some(_), 0) => return err("block 0 cannot attach to anything".into()),
            (None, _) => return err(format!("block {bi} has no attachment, so the hypertree is disconnected")),
            (Some(a), _) => {
                if a.parent >= bi {
                    return err(format!("block {bi} attaches to block {}, which does not precede it", a.parent));
                }
                if a.glue.len() != 1 {
                    return err(format!(
                        "block {bi} reuses {} vertices of block {}; linear hypertrees share exactly one",
                        a.glue.len(),
                        a.parent
                    ));
                }
                let (vertex, local) = a.glue[0];
                if !block_sets[a.parent].contains(vertex) {
                    return err(format!("vertex {vertex} is not in block {}", a.parent));
                }
                if local >= size {
                    return err(format!("local vertex {local} out of range for {}", block.template));
                }
                ids[local] = vertex;
            }
        }
        for id in ids.iter_mut().filter(|id| **id == usize::MAX) {
            *id = next;
            next += 1;
        }
        let local = block.template.graph();
        for e in local.edges() {
            g.add_edge(ids[e.u], ids[e.v]);
        }
        block_sets.push(ids.iter().copied().collect());
    }
    debug_assert_eq!(next, n);
    Ok((g, block_sets))
}
