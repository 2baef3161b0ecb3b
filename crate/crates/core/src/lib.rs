//! Construction and exact verification of the graphs `G(q, k)`.
//!
//! `G(q, k)` lives on `qk + 1` vertices arranged on a circle; each vertex
//! sees its two circle neighbours and, in each of `q` blocks of length `k`,
//! the `k - 2` vertices at offsets `2..k`. The crate builds these graphs
//! and checks their structure with exact solvers: induced-pattern search,
//! branch-and-bound colouring, and small-graph isomorphism, each answer
//! backed by a certificate that an independent checker re-verifies.

pub mod chroma;
pub mod cli;
pub mod critic;
pub mod family;
pub mod formats;
pub mod graph;
pub mod iso;
pub mod pattern;

pub use chroma::{chromatic_number, is_k_colorable, verify_coloring, Budget, ChiResult, Coloring};
pub use family::{build_family, canonical_coloring, partition_classes, FamilyParams};
pub use graph::{Graph, GraphError, VertexSet};
pub use iso::is_isomorphic_small;
pub use pattern::{contains_induced, freeness_report, make_pattern, Pattern};
