//! Exact vertex coloring for graphs with no induced claw, 4K1, 5-wheel,
//! C5-twin, P5-twin or K5-e, and exact chromatic index for graphs with no
//! matching of size four.
//!
//! The entry points are [`color_class_graph`] and [`chromatic_index`]. Both
//! return certificates that can be re-checked independently: every coloring
//! is verified proper, and optimality is witnessed either by a clique of the
//! same size or by the exact solver.

pub mod chromatic_index;
pub mod coloring;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod structure;

pub use chromatic_index::{chromatic_index, chromatic_index_with, matching_gate, ChromaticIndex, EdgeColoring};
pub use coloring::{
    color_alpha2, color_class_graph, color_class_graph_with, color_k_colorable_case, color_three_xi_case, exact_color,
    good_stable_set, l_color_three_cliques, ClassColoring, ListInstance, Route, DEFAULT_BUDGET,
};
pub use decomposition::{decompose, find_clique_cutset, recombine, AtomTree};
pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Matching};
pub use recognition::{clique_number, find_forbidden, find_hole, in_class, stability_number, ForbiddenKind, Witness};
pub use structure::{classify_c5, classify_c7, validate_claims, C5Structure, C7Structure, ClaimId, ClaimViolation};
