//! Geometry of the three space families, their Z/2 actions, and the
//! path/multipath data model shared by all planners.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values can be shared freely across threads.

mod action;
mod export;
mod multipath;
mod path;
mod point;
mod strata;

pub use action::{apply_action, involution_holds, reflect_last, ActionKind, ActionSpec, Group, Z2};
pub use export::{sample_paths, MultipathExport, PathExport};
pub use multipath::{BrokenMultipath, Multipath};
pub use path::{half_great_circle, slerp_geodesic, sup_distance, PathFn, Primitive};
pub use point::{EuclideanPoint, ObstacleSet, Point, SpaceKind, SpherePoint, TorusPoint};
pub use strata::{torus_strata, torus_strata_with, TorusStrata};

pub(crate) use point::{dist, dot, norm};

/// Errors from geometric constructions and queries.
#[derive(Debug, thiserror::Error)]
pub enum SpaceError {
    #[error("{what}, got {got} coordinates")]
    BadDimension { what: &'static str, got: usize },
    #[error("vector has norm {norm}, expected a unit vector")]
    NotUnit { norm: f64 },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("coordinates must be finite")]
    NotFinite,
    #[error("points belong to different spaces")]
    SpaceMismatch,
    #[error("geodesic endpoints are antipodal")]
    AntipodalPair,
    #[error("path has no segments")]
    EmptyPath,
    #[error("path segments do not chain continuously (gap {gap:e})")]
    DiscontinuousJunction { gap: f64 },
    #[error("multipath components do not share a start point (gap {gap:e})")]
    StartMismatch { gap: f64 },
    #[error("patching element {index} does not connect the start points (gap {gap:e})")]
    PatchMismatch { index: usize, gap: f64 },
    #[error("multipath shapes differ: {left} vs {right} components")]
    ShapeMismatch { left: usize, right: usize },
    #[error("obstacle set must be nonempty")]
    EmptyObstacleSet,
    #[error("degenerate obstacle {index}: {reason}")]
    DegenerateObstacle { index: usize, reason: &'static str },
}
