//! Facets of symmetric edge polytopes.
//!
//! For a connected graph `G` on vertices `1..=N` the configuration consists of
//! the points `±(e_i - e_j)` for every edge `{i, j}`, written in coordinates
//! `R^(N-1)` where vertex 1 is dropped. Facets are enumerated through maximal
//! bipartite subgraphs and sign vectors on a spanning tree; an independent
//! brute-force oracle is provided for cross-checking.

pub mod bipartite;
pub mod config;
pub mod counting;
pub mod error;
mod exact;
pub mod faces;
pub mod facet;
pub mod facet_enum;
pub mod families;
pub mod graph;
pub mod kuramoto;
pub mod oracle;
pub mod report;
pub mod tree;

pub use bipartite::{
    enumerate_maximal_bipartite_subgraphs, has_even_cycle, Bipartition, MaxBipartiteSubgraph, Side,
};
pub use config::{affine_dimension, IncidenceMatrix, PointConfiguration};
pub use counting::{
    count_sum_two, count_sum_zero, even_cycle_facet_count, facet_census, joined_cycles_count,
    ClassRecord, FacetCensus, JoinedCyclesCount,
};
pub use error::{Error, Result, ValidationError};
pub use exact::{determinant, primitive, rank};
pub use faces::{balancing_check, face_properties, is_balanced, simple_cycles, FaceProperties};
pub use facet::{verify_facet, verify_facet_rational, Facet, InnerNormal};
pub use facet_enum::{
    build_cycle_system, canonical_facet_pair, count_sign_vectors, enumerate_all_facets,
    enumerate_facet_classes, enumerate_sign_vectors, facet_from_sign_vector, is_simplicial,
    CycleConstraintSystem, FacetClass, SignVector,
};
pub use graph::{parse_edge_list, read_edge_list, DirectedEdge, Edge, Graph};
pub use kuramoto::{
    face_system_support, facet_subsystem_support, homogenization_data, homotopy_lift,
    unmixed_support, HomogenizationData, SupportSet,
};
pub use oracle::brute_force_facets;
pub use tree::{fundamental_cycle, spanning_tree, CycleVector, SpanningTree};
