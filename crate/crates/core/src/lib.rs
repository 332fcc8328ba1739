//! Covering codegree thresholds of 3-uniform hypergraphs.
//!
//! A vertex of a 3-graph `G` is *covered* by a pattern `F` when some copy of
//! `F` in `G` (not necessarily induced) contains it. `c₂(n, F)` is the
//! largest minimum codegree `δ₂` of an `n`-vertex 3-graph with an uncovered
//! vertex. This crate builds the classical constructions that bound it from
//! below, checks coverings exactly, evaluates the greedy upper bound, and
//! computes `c₂(n, F)` exhaustively for `n <= 7`.
//!
//! ```
//! use h3cover::{constructions::f1, embed_covering, Pattern};
//!
//! let (g, claims) = f1(11)?;
//! assert_eq!(g.min_codegree(), 5);
//! let apex = claims.apex.unwrap();
//! assert!(embed_covering(&g, apex, &Pattern::complete(4)?).is_none());
//! # Ok::<(), h3cover::Error>(())
//! ```

pub mod analysis;
pub mod canon;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod format;
pub mod graph;
pub mod patterns;

pub use analysis::{
    c2_bounds, c2_exact, classify_sy, recover_partition, verify_construction, BoundBracket, Budget,
    Recovery, SearchOptions, SearchReport, SyClass, SyLabel, VerifyReport,
};
pub use canon::{canonical_key, edit_distance, CanonicalKey};
pub use constructions::{ConstructionClaims, Tripartition};
pub use embed::{
    edge_extendable, embed_covering, find_copy, greedy_embed, uncovered_vertices, Embedding,
};
pub use error::{Error, Result};
pub use graph::{Hypergraph3, LinkGraph, Triple, TripleSet};
pub use patterns::{degeneracy, greedy_cover_bound, Pattern, PatternKind};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/stability.md")]
    mod stability {}
}
