//! Landmark-based graph representation.
//!
//! Nodes are described by their hop distances to a set of landmarks. This
//! crate decides when those coordinates identify every node (resolution
//! sets) and when they identify the whole graph (construction sets), turns
//! the former into the latter, rebuilds graphs from construction-set
//! coordinates, and computes metric, link and strong metric dimension along
//! with counting bounds.
//!
//! With the default `parallel` feature the independent inner loops run on
//! rayon; every result is identical to a sequential run.

pub mod bounds;
pub mod cli;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod landmarks;
pub mod par;
pub mod reconstruct;
pub mod solvers;

pub use bounds::{bounds_report, bounds_report_for, BoundKind, BoundParams, BoundsReport};
pub use distance::{all_pairs_distances, all_pairs_distances_with, DistanceMatrix};
pub use error::{Error, Result};
pub use generate::{generate, Family};
pub use graph::{Edge, Graph, Node};
pub use landmarks::{
    ambiguity_report, coordinates, is_edge_invisible, is_nonedge_ambiguous_candidate,
    is_resolution_set, AmbiguityReport, DeltaProfile, DistanceVectorMatrix, LandmarkSet,
    Resolution,
};
pub use par::Strategy;
pub use reconstruct::{enumerate_consistent_graphs, is_unique_realization, reconstruct};
pub use solvers::{
    is_construction_set, is_strong_resolving_set, link_dimension, metric_dimension,
    strong_metric_dimension, upgrade_to_construction_set, DimensionKind, DimensionResult,
    Method, SearchOptions,
};
