//! Exact local metric dimension for small graphs, together with the
//! structural parameters it is played against (clique number, true twins),
//! the named graph families built around it, and a harness that checks the
//! known characterisations exhaustively on small orders.
//!
//! Graphs are limited to 62 vertices so that every neighbourhood fits in one
//! machine word; everything the harness touches is far below that.

pub mod bitset;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod hitting;
pub mod invariants;
pub mod localdim;
pub mod pattern;
pub mod verify;

pub use bitset::VertexSet;
pub use enumerate::{canonical_key, connected_graphs, read_corpus, CanonicalKey, Corpus};
pub use error::{Error, Graph6Error, Result};
pub use families::FamilySpec;
pub use graph::{DistanceMatrix, Graph, MAX_ORDER};
pub use invariants::{clique_number, twin_lower_bound, twin_partition, Clique, TwinPartition};
pub use localdim::{
    distinguisher_sets, is_local_resolving, is_resolving, local_metric_dimension, metric_dimension, paper_lower_bounds,
    ConstraintSystem, DimResult, LowerBounds, Mode,
};
pub use pattern::{find_induced, is_gamma_free, PatternMatch};
