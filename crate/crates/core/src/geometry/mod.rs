//! Points, axes, exact predicates, critical slopes and graph containers.

pub mod axis;
pub mod critical;
pub mod graph;
pub mod point;
pub mod position;

pub use axis::{compare_projections, project, Axis, OrthoSystem};
pub use critical::{critical_axes, critical_systems, pair_kind, CriticalSchedule, Fold, PairKind, SweepEvent};
pub use graph::{graph_cost, GeometricGraph, RootedTree};
pub use point::{orientation, squared_distance, Point, RootedPointSet, MAX_LATTICE_COORD};
pub use position::validate_general_position;
