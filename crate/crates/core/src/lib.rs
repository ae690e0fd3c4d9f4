//! Sum graph labelings.
//!
//! A set of integer labels induces a graph in which two distinct labels are
//! adjacent exactly when their sum is also a label. This crate induces such
//! graphs, builds labelings for named families and derived graphs, and finds
//! minimum-range labelings by exhaustive search.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod induce;
pub mod iso;
pub mod labeling;
pub mod search;

pub use bounds::{
    is_valid_labeling, isd_lower_bound, optimality_witness_check, sd_lower_bound,
    OptimalityReport,
};
pub use error::{Error, Result};
pub use families::{generate, known_values, recognize, FamilyKind, FamilySpec, Interval, KnownValues};
pub use search::{SearchCertificate, SearchProblem};
pub use graph::SimpleGraph;
pub use induce::{induce, range, InducedResult};
pub use iso::{find_isomorphism, isomorphic, isomorphic_with_cap, DEFAULT_ISO_CAP};
pub use labeling::{Domain, Labeling};
