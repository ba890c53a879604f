//! Plane multigraphs, six-edge-colorings and T-join packings, reductions,
//! and an exact discharging auditor.

pub mod coloring;
pub mod cuts;
pub mod discharging;
pub mod ecoloring;
pub mod plane_graph;
pub mod reductions;
pub mod workbench;

pub use coloring::{Color, ColorSet, EdgeColoring};
pub use discharging::{audit, AuditReport, Verdict};
pub use plane_graph::{parse_plane_graph, PlaneMultigraph};
pub use reductions::{match_catalog, LemmaId, SwapSpec};
pub use workbench::{generate, InstanceSpec};
