//! Exact minimum edge counts for clique-covered graphs, the tree-glued
//! extremal family, and its structural recognition.

mod construct;
mod convex;
mod counterexample;
pub(crate) mod hypertree;
mod recognize;

pub use construct::{
    build_extremal, enumerate_extremal, enumerate_extremal_capped, extremal_spec, Shape, DEFAULT_ENUMERATION_CAP,
};
pub use convex::{maximize_convex_sum, ConvexOptimum};
pub use counterexample::{cocktail_party_counterexample, CounterexampleReport};
pub use hypertree::{build_gtree, Attachment, Block, HypertreeSpec, Template};
pub use recognize::{find_witness, recognize_extremal, ExtremalWitness, Recognition, RejectReason};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("need n > k >= 3 to decompose, got n = {n}, k = {k}")]
    Domain { n: usize, k: usize },
    #[error("no graph exists: {0}")]
    NoSuchGraph(String),
    #[error("invalid hypertree spec: {0}")]
    Spec(String),
    #[error("enumeration cap of {cap} exceeded after {found} graphs")]
    CapExceeded { cap: usize, found: usize },
    #[error("{0} vertices is beyond the isomorphism-rejection limit")]
    TooLarge(usize),
    #[error("convex sum: {0}")]
    Infeasible(String),
}

/// `C(a, 2)`, zero for `a < 2`.
#[inline]
pub fn choose2(a: usize) -> usize {
    a * a.saturating_sub(1) / 2
}

/// `n − k = q(k−1) + r` with `q ≥ 0` and `1 ≤ r ≤ k−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub q: usize,
    pub r: usize,
}

pub fn decompose(n: usize, k: usize) -> Result<Decomposition, ExtremalError> {
    if k < 3 || n <= k {
        return Err(ExtremalError::Domain { n, k });
    }
    Ok(split(n - k, k - 1))
}

/// Writes `d = q·base + r` with `1 ≤ r ≤ base`; requires `d ≥ 1`.
fn split(d: usize, base: usize) -> Decomposition {
    let q = (d - 1) / base;
    Decomposition { q, r: d - q * base }
}

/// Minimum edge count of a connected `n`-vertex graph with a `(k,1)`-cover.
pub fn min_edges_kcover(n: usize, k: usize) -> Result<usize, ExtremalError> {
    if k < 3 {
        return Err(ExtremalError::Domain { n, k });
    }
    if n < k {
        return Err(ExtremalError::NoSuchGraph(format!(
            "a connected graph on {n} < {k} vertices has no ({k},1)-cover"
        )));
    }
    if n == k {
        return Ok(choose2(k));
    }
    let Decomposition { q, r } = decompose(n, k)?;
    Ok((q + 2) * choose2(k) - choose2(k - r))
}

/// Minimum edge count of an `n`-vertex graph with `c` components, each
/// carrying a `(k,1)`-cover.
pub fn min_edges_components(n: usize, k: usize, c: usize) -> Result<usize, ExtremalError> {
    if k < 3 || c < 1 {
        return Err(ExtremalError::Domain { n, k });
    }
    let floor = k + c - 1;
    if n < floor {
        return Err(ExtremalError::NoSuchGraph(format!(
            "{c} components each with a ({k},1)-cover need at least {floor} vertices, got {n}"
        )));
    }
    if n == floor {
        return Ok(choose2(k));
    }
    let Decomposition { q, r } = split(n - floor, k - 1);
    Ok((q + 2) * choose2(k) - choose2(k - r))
}

/// Minimum edge count of an `n`-vertex graph (connectivity not required) in
/// which every vertex lies in a `K_k`. Note the decomposition base is `k`.
pub fn min_edges_vertex_kcover(n: usize, k: usize) -> Result<usize, ExtremalError> {
    if k < 2 {
        return Err(ExtremalError::Domain { n, k });
    }
    if n < k {
        return Err(ExtremalError::NoSuchGraph(format!("no K_{k} fits in {n} vertices")));
    }
    if n == k {
        return Ok(choose2(k));
    }
    let Decomposition { q, r } = split(n - k, k);
    Ok((q + 2) * choose2(k) - choose2(k - r))
}
