//! Clique covers of graphs: checking, minimum edge counts, the tree-glued
//! extremal family, certified lower bounds, and an exhaustive oracle.
//!
//! ```
//! use kcover::{has_cover, min_edges_kcover, build_extremal, CoverSpec, Shape};
//!
//! let g = build_extremal(12, 4, Shape::Star).unwrap();
//! assert_eq!(g.edge_count(), min_edges_kcover(12, 4).unwrap());
//! assert!(has_cover(&g, CoverSpec::new(4, 1).unwrap()).holds);
//! ```

pub mod canon;
pub mod cover;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod reduce;
pub mod shrink;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use cover::{has_cover, has_cover_with_counts, truss_decompose, CoverError, CoverReport, CoverSpec, Truss};
pub use extremal::{
    build_extremal, build_gtree, cocktail_party_counterexample, decompose, enumerate_extremal, maximize_convex_sum,
    min_edges_components, min_edges_kcover, min_edges_vertex_kcover, recognize_extremal, ExtremalError,
    HypertreeSpec, Shape, Template,
};
pub use graph::{Edge, Graph, GraphError, VertexSet};
pub use oracle::{all_minimizers, enumerate_connected, min_edges_bruteforce, SearchSpec};
pub use reduce::{contract_and_verify, find_edge_not_in_k4, reduce_to_k4_covered, ReduceError};
pub use shrink::{run_procedure, verify_trace, Policy, ShrinkTrace};

// Compile and run the guide's snippets as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/peeling.md")]
    mod peeling {}
    #[doc = include_str!("../../../book/src/contraction.md")]
    mod contraction {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
