//! Planar primitives: points, chords, the three body representations, a
//! shared arc-length boundary parametrization, half-plane clipping and
//! central-symmetry detection.

mod body;
mod clip;
mod hull;
mod outline;
mod point;
mod symmetry;

use std::f64::consts::{PI, TAU};

pub use body::{ArcGon, BodyParseError, BodySpec, ConvexBody, ConvexPolygon, Disc, Element};
pub use clip::{clip_halfplane, HalfPlane};
pub use hull::hull_polygon;
pub use outline::{Outline, Piece};
pub use point::{Chord, Point2};
pub use symmetry::symmetry_center;

pub(crate) use body::arc_sweep;

/// On-boundary tolerance, relative to the body diameter.
pub const EPS_ON: f64 = 1e-9;
/// Central-symmetry tolerance, relative to the body diameter.
pub const EPS_SYM: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("not convex: {0}")]
    NotConvex(String),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("point is {distance:.3e} away from the boundary")]
    NotOnBoundary { distance: f64 },
    #[error("half-plane misses the body")]
    EmptyResult,
}

/// Maps an angle difference into (-π, π].
pub(crate) fn normalize_turn(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Support point of `body` in `direction`; faces resolve to their midpoint.
pub fn support_point(body: &ConvexBody, direction: Point2) -> Point2 {
    body.outline().support(direction).1
}

/// Point at normalized arc-length parameter `t` (taken modulo 1).
pub fn boundary_point_at(body: &ConvexBody, t: f64) -> Point2 {
    body.outline().point_at(t)
}

/// Inverse of [`boundary_point_at`]; fails if `p` is farther than `EPS_ON·D` from the boundary.
pub fn boundary_param_of(body: &ConvexBody, p: Point2) -> Result<f64, GeometryError> {
    body.outline().param_of(p)
}
