//! Finite topological spaces enriched with a per-point open-neighbourhood
//! assignment (a *scope function*), the operator calculus this induces, and
//! three application models built on it: rough-set approximation, sensor
//! coverage over a grid, and forward spread on contact networks.
//!
//! Everything is exact, deterministic, and pure: spaces are immutable after
//! construction and every operator is a function of its inputs.

pub mod classes;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod morphism;
pub mod point_set;
pub mod props;
pub mod rough;
pub mod scope;
pub mod sensor;
pub mod separation;
pub mod spread;
pub mod topology;

pub use classes::{classify_set, enumerate_class, verify_hierarchy, ClassName, ClassProfile, HierarchyReport};
pub use error::AuraError;
pub use fixtures::{fixture, fixture_deployment, fixture_names, fixture_space, Fixture};
pub use morphism::{compose, ContinuityProfile, MapViolation, SpaceMap};
pub use point_set::PointSet;
pub use rough::{
    approximate, is_refinement, pawlak_approximate, refinement_report, ApproximationReport,
    PartitionOracle, Ratio, RefinementReport,
};
pub use scope::{
    validate_scope, AuraSpace, ClosureTrace, ScopeFunction, ScopeProfile, ScopeViolation,
};
pub use sensor::{
    coverage_report, relay_reach, CoverageReport, GridSpace, Region, Sensor, SensorDeployment,
    UncoveredAura,
};
pub use separation::{separation_profile, t1_via_singletons, SeparationProfile};
pub use spread::{
    apply_distancing, apply_quarantine, spread_components, spread_step, spread_trace,
    SpreadComponent, SpreadTrace,
};
pub use topology::{Topology, TopologyViolation};
