//! Swap sets: pairs of disjoint dominating sets joined by a perfect
//! matching, and the smallest size `DD_m(G)` such a pair can have.

pub mod certificate;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod grid;
pub mod params;
pub mod product;
pub mod small_alpha;
pub mod tree;
pub mod vertex_set;

pub use certificate::{check_certificate, verify_certificate, Matching, SwapCertificate, Violation};
pub use error::{Error, Result};
pub use exact::{dd_m_exact, has_swap_set, DdmResult, DdmStatus, SwapSetAnswer};
pub use graph::{cartesian_product, hat_graph, parse_graph, Graph, Product};
pub use params::{domination_number, independence_number, is_strong_graph, SearchLimits, StemKind};
pub use vertex_set::VertexSet;
