//! Center, radius and eccentricity of finite simple graphs, the exact set of
//! center sizes attainable for a given order and radius, explicit witness
//! graphs for every attainable size, and exhaustive small-graph searches that
//! check all of it.

pub mod codec;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod omega;
pub mod search;

pub use constructions::{validate_witness, witness, ValidationReport, WitnessCase, WitnessRecipe};
pub use error::{Error, Result};
pub use graph::{build_graph, Graph, StandardKind, MAX_ORDER};
pub use metrics::{metric_profile, CentralRatio, MetricProfile};
pub use omega::{omega_contains, omega_set, ratio_witness};
