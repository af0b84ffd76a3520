//! Exhaustive ground truth at desk scale.
//!
//! [`min_edges_bruteforce`] walks edge counts upward from a degree bound and,
//! for each count `m`, examines every labeled `m`-edge subset of `K_n`. The
//! first `m` with a qualifying graph is the minimum. Nothing here depends on
//! the closed-form results it is used to check.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::cover::{covers, every_vertex_in_clique};
use crate::graph::Graph;

/// Largest vertex count for the edge-subset search (28 candidate edges).
pub const ORACLE_MAX_N: usize = 8;
/// Largest vertex count for isomorphism-class enumeration.
pub const ENUMERATION_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle search is limited to {ORACLE_MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("invalid search: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Every edge lies in at least `l` copies of `K_k`.
    EdgeCover,
    /// Every vertex lies in a copy of `K_k`.
    VertexCover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub require_connected: bool,
    /// Exact number of components, when constrained.
    pub component_count: Option<usize>,
    pub condition: Condition,
}

impl SearchSpec {
    /// Connected graphs with a `(k, l)`-cover.
    pub fn connected(n: usize, k: usize, l: usize) -> Self {
        SearchSpec { n, k, l, require_connected: true, component_count: None, condition: Condition::EdgeCover }
    }

    /// Graphs with exactly `c` components, each `(k,1)`-covered.
    pub fn components(n: usize, k: usize, c: usize) -> Self {
        SearchSpec { n, k, l: 1, require_connected: false, component_count: Some(c), condition: Condition::EdgeCover }
    }

    /// Graphs, connected or not, in which every vertex lies in a `K_k`.
    pub fn vertex_cover(n: usize, k: usize) -> Self {
        SearchSpec { n, k, l: 1, require_connected: false, component_count: None, condition: Condition::VertexCover }
    }

    fn validate(&self) -> Result<(), OracleError> {
        if self.n > ORACLE_MAX_N {
            return Err(OracleError::TooLarge(self.n));
        }
        if self.n == 0 {
            return Err(OracleError::Invalid("n must be positive".into()));
        }
        let min_k = match self.condition {
            Condition::EdgeCover => 3,
            Condition::VertexCover => 2,
        };
        if self.k < min_k {
            return Err(OracleError::Invalid(format!("k must be at least {min_k}, got {}", self.k)));
        }
        if self.l == 0 {
            return Err(OracleError::Invalid("l must be at least 1".into()));
        }
        if let Some(c) = self.component_count {
            if c == 0 || c > self.n {
                return Err(OracleError::Invalid(format!("component count {c} impossible on {} vertices", self.n)));
            }
            if self.require_connected && c != 1 {
                return Err(OracleError::Invalid("connected search with more than one component".into()));
            }
        }
        Ok(())
    }

    fn components_required(&self) -> Option<usize> {
        if self.require_connected {
            Some(1)
        } else {
            self.component_count
        }
    }

    /// Cheap lower bound on the edge count: spanning-forest size and the
    /// minimum degree every covered vertex needs.
    fn start_edges(&self) -> usize {
        let n = self.n;
        let forest = self.components_required().map_or(0, |c| n - c);
        let degree = match self.condition {
            Condition::VertexCover => (n * (self.k - 1)).div_ceil(2),
            Condition::EdgeCover if self.require_connected && n > 1 => (n * (self.k - 1)).div_ceil(2),
            Condition::EdgeCover => 0,
        };
        forest.max(degree)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Minimizer {
    /// graph6 text of the canonical representative.
    pub canonical: CanonicalForm,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// `None` when no edge count in `searched` admits a qualifying graph.
    pub minimum: Option<usize>,
    /// Filled only by [`all_minimizers`] / `collect = true`; sorted by
    /// canonical form.
    pub minimizers: Vec<Minimizer>,
    pub labeled_hits: u64,
    pub subsets_examined: u64,
    /// Inclusive range of edge counts examined.
    pub searched: (usize, usize),
    pub elapsed_ms: u128,
}

/// Minimum edge count for `spec`, without collecting minimizers.
pub fn min_edges_bruteforce(spec: &SearchSpec) -> Result<SearchReport, OracleError> {
    search(spec, false)
}

/// Every minimizer of `spec`, one per isomorphism class.
pub fn all_minimizers(spec: &SearchSpec) -> Result<Vec<Graph>, OracleError> {
    Ok(search(spec, true)?.minimizers.into_iter().map(|m| m.graph).collect())
}

/// Runs the search inside a dedicated pool of `workers` threads.
pub fn search_with_workers(spec: &SearchSpec, collect: bool, workers: usize) -> Result<SearchReport, OracleError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| OracleError::Invalid(e.to_string()))?;
    pool.install(|| search(spec, collect))
}

/// Ascending edge-count search. Work is split by the two lowest-numbered
/// edges of each subset and merged deterministically, so the result does not
/// depend on the number of threads.
pub fn search(spec: &SearchSpec, collect: bool) -> Result<SearchReport, OracleError> {
    spec.validate()?;
    let started = Instant::now();
    let ctx = Ctx::new(spec);
    let total = ctx.pairs.len();
    let start = spec.start_edges();
    let mut examined = 0u64;
    for m in start..=total {
        let tasks: Vec<(usize, usize)> = match m {
            0 | 1 => vec![(usize::MAX, usize::MAX)],
            _ => (0..total).flat_map(|a| (a + 1..total).map(move |b| (a, b))).collect(),
        };
        let partial: Vec<TaskResult> = tasks.par_iter().map(|&(a, b)| ctx.run_task(m, a, b, collect)).collect();
        let mut hits = 0u64;
        let mut forms = BTreeSet::new();
        for p in partial {
            examined += p.examined;
            hits += p.hits;
            forms.extend(p.forms);
        }
        if hits > 0 {
            return Ok(SearchReport {
                spec: *spec,
                minimum: Some(m),
                minimizers: forms.into_iter().map(|canonical| Minimizer { graph: canonical.to_graph(), canonical }).collect(),
                labeled_hits: hits,
                subsets_examined: examined,
                searched: (start, m),
                elapsed_ms: started.elapsed().as_millis(),
            });
        }
    }
    Ok(SearchReport {
        spec: *spec,
        minimum: None,
        minimizers: Vec::new(),
        labeled_hits: 0,
        subsets_examined: examined,
        searched: (start, total),
        elapsed_ms: started.elapsed().as_millis(),
    })
}

#[derive(Default)]
struct TaskResult {
    examined: u64,
    hits: u64,
    forms: BTreeSet<CanonicalForm>,
}

struct Ctx {
    spec: SearchSpec,
    pairs: Vec<(usize, usize)>,
    /// Edge-index mask of the edges at each vertex.
    incident: Vec<u32>,
}

impl Ctx {
    fn new(spec: &SearchSpec) -> Self {
        let n = spec.n;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut incident = vec![0u32; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            incident[a] |= 1 << i;
            incident[b] |= 1 << i;
        }
        Ctx { spec: *spec, pairs, incident }
    }

    /// All `m`-subsets whose two lowest edges are `a < b` (or, for `m < 2`,
    /// all subsets).
    fn run_task(&self, m: usize, a: usize, b: usize, collect: bool) -> TaskResult {
        let mut out = TaskResult::default();
        let total = self.pairs.len();
        let mut visit = |mask: u32| {
            out.examined += 1;
            if self.accepts(mask) {
                out.hits += 1;
                if collect {
                    let g = self.graph(mask);
                    out.forms.insert(canonical_form(&g).expect("n within canonical limit"));
                }
            }
        };
        match m {
            0 => visit(0),
            1 => (0..total).for_each(|i| visit(1 << i)),
            _ => {
                let width = total - b - 1;
                let prefix = (1u32 << a) | (1u32 << b);
                for_each_combination(width, m - 2, |c| visit(prefix | ((c as u32) << (b + 1))));
            }
        }
        out
    }

    #[inline]
    fn accepts(&self, mask: u32) -> bool {
        let spec = &self.spec;
        let n = spec.n;
        let need = spec.k - 1;
        for &inc in &self.incident {
            let d = (mask & inc).count_ones() as usize;
            let ok = match spec.condition {
                Condition::VertexCover => d >= need,
                Condition::EdgeCover => d >= need || (d == 0 && !(spec.require_connected && n > 1)),
            };
            if !ok {
                return false;
            }
        }
        let rows = self.rows(mask);
        let rows = &rows[..n];
        if let Some(c) = spec.components_required() {
            if component_count(rows) != c {
                return false;
            }
        }
        match spec.condition {
            Condition::EdgeCover => covers(rows, spec.k, spec.l),
            Condition::VertexCover => every_vertex_in_clique(rows, spec.k),
        }
    }

    #[inline]
    fn rows(&self, mask: u32) -> [u64; ORACLE_MAX_N] {
        let mut rows = [0u64; ORACLE_MAX_N];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = self.pairs[i];
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        rows
    }

    fn graph(&self, mask: u32) -> Graph {
        Graph::from_rows(self.rows(mask)[..self.spec.n].to_vec())
    }
}

fn component_count(rows: &[u64]) -> usize {
    let all = (1u64 << rows.len()) - 1;
    let mut seen = 0u64;
    let mut count = 0;
    while seen != all {
        let start = (!seen & all).trailing_zeros();
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        count += 1;
    }
    count
}

/// Calls `f` with every `width`-bit word having exactly `ones` bits set, in
/// increasing numeric order (Gosper's hack).
fn for_each_combination(width: usize, ones: usize, mut f: impl FnMut(u64)) {
    if ones > width {
        return;
    }
    if ones == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << width;
    let mut x = (1u64 << ones) - 1;
    while x < limit {
        f(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// All graphs on `0..=n` vertices up to isomorphism, grouped by vertex count.
///
/// Each level extends every graph of the previous level by one vertex with
/// every possible neighborhood and keeps one graph per canonical form; every
/// graph arises this way by deleting its last vertex.
pub fn enumerate_graphs_up_to(n: usize) -> Result<Vec<Vec<Graph>>, OracleError> {
    if n > ENUMERATION_MAX_N {
        return Err(OracleError::TooLarge(n));
    }
    let mut levels = vec![vec![Graph::new(0)]];
    for size in 1..=n {
        let prev = &levels[size - 1];
        let forms: BTreeSet<CanonicalForm> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..1 << (size - 1)).map(move |nbrs| {
                    let mut h = Graph::new(size);
                    for e in g.edges() {
                        h.add_edge(e.u, e.v);
                    }
                    for w in 0..size - 1 {
                        if nbrs >> w & 1 == 1 {
                            h.add_edge(w, size - 1);
                        }
                    }
                    canonical_form(&h).expect("within limit")
                })
            })
            .collect();
        levels.push(forms.into_iter().map(|f| f.to_graph()).collect());
    }
    Ok(levels)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, OracleError> {
    let mut levels = enumerate_graphs_up_to(n)?;
    Ok(levels.pop().unwrap_or_default().into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{has_cover, CoverSpec};

    #[test]
    fn combinations_are_complete() {
        let mut seen = Vec::new();
        for_each_combination(5, 2, |x| seen.push(x));
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|x| x.count_ones() == 2));
        let mut count = 0;
        for_each_combination(3, 0, |_| count += 1);
        for_each_combination(2, 3, |_| count += 100);
        assert_eq!(count, 1);
    }

    #[test]
    fn small_minima() {
        let r = min_edges_bruteforce(&SearchSpec::connected(4, 3, 1)).unwrap();
        assert_eq!(r.minimum, Some(5));
        let r = min_edges_bruteforce(&SearchSpec::connected(5, 3, 2)).unwrap();
        assert_eq!(r.minimum, Some(9));
        let r = min_edges_bruteforce(&SearchSpec::connected(7, 3, 1)).unwrap();
        assert_eq!(r.minimum, Some(9));
        let r = min_edges_bruteforce(&SearchSpec::connected(3, 4, 1)).unwrap();
        assert_eq!(r.minimum, None);
        assert_eq!(r.subsets_examined, 0);
    }

    #[test]
    fn minimizer_lists() {
        let one = all_minimizers(&SearchSpec::connected(4, 3, 1)).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].edge_count(), 5);
        let bowtie = all_minimizers(&SearchSpec::connected(5, 3, 1)).unwrap();
        assert_eq!(bowtie.len(), 1);
        assert_eq!(bowtie[0].edge_count(), 6);
        assert!(bowtie[0].is_connected());
        for g in all_minimizers(&SearchSpec::connected(5, 3, 2)).unwrap() {
            assert!(has_cover(&g, CoverSpec::new(4, 1).unwrap()).holds);
        }
    }

    #[test]
    fn report_is_self_consistent() {
        let spec = SearchSpec::connected(6, 3, 1);
        let r = search(&spec, true).unwrap();
        let m = r.minimum.unwrap();
        assert!(!r.minimizers.is_empty());
        assert!(r.minimizers.iter().all(|x| x.graph.edge_count() == m && x.graph.is_connected()));
        assert!(r.minimizers.windows(2).all(|w| w[0].canonical < w[1].canonical));
        assert!(r.labeled_hits as usize >= r.minimizers.len());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let spec = SearchSpec::connected(6, 4, 1);
        let a = search_with_workers(&spec, true, 1).unwrap();
        let b = search_with_workers(&spec, true, 3).unwrap();
        assert_eq!(a.minimum, b.minimum);
        assert_eq!(a.subsets_examined, b.subsets_examined);
        let fa: Vec<_> = a.minimizers.iter().map(|m| m.canonical.clone()).collect();
        let fb: Vec<_> = b.minimizers.iter().map(|m| m.canonical.clone()).collect();
        assert_eq!(fa, fb);
    }

    #[test]
    fn component_and_vertex_variants() {
        // triangle plus an isolated vertex
        let r = search(&SearchSpec::components(4, 3, 2), true).unwrap();
        assert_eq!(r.minimum, Some(3));
        assert_eq!(r.minimizers.len(), 1);
        let r = min_edges_bruteforce(&SearchSpec::components(7, 3, 2)).unwrap();
        assert_eq!(r.minimum, Some(8));
        let r = min_edges_bruteforce(&SearchSpec::vertex_cover(7, 3)).unwrap();
        assert_eq!(r.minimum, Some(8));
    }

    #[test]
    fn spec_validation() {
        assert_eq!(min_edges_bruteforce(&SearchSpec::connected(9, 3, 1)).unwrap_err(), OracleError::TooLarge(9));
        assert!(min_edges_bruteforce(&SearchSpec::connected(5, 2, 1)).is_err());
        assert!(min_edges_bruteforce(&SearchSpec::connected(5, 3, 0)).is_err());
        assert!(min_edges_bruteforce(&SearchSpec::components(5, 3, 0)).is_err());
        assert!(min_edges_bruteforce(&SearchSpec::vertex_cover(5, 2)).is_ok());
    }

    #[test]
    fn graph_counts_match_known_sequence() {
        let levels = enumerate_graphs_up_to(6).unwrap();
        let all: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = levels.iter().skip(1).map(|l| l.iter().filter(|g| g.is_connected()).count()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert!(enumerate_graphs_up_to(9).is_err());
    }
}
