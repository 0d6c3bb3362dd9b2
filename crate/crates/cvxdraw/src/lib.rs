//! Exact-arithmetic toolkit for straight-line graph drawings whose vertex set
//! and edge-midpoint set are required to be strictly or weakly convex, plus
//! machinery for large convex subsets of planar Minkowski sums `A + A`.
//!
//! The geometry kernel ([`geom`]) is generic over the scalar type: exact
//! computations run over [`Scalar`] (big rationals and quadratic extensions
//! `a + b*sqrt(d)`), the numerical search ([`search`]) runs the same
//! predicates over `f64`, and the Minkowski dynamic program runs them over
//! `BigInt` after clearing denominators. Concrete exact aliases are exported
//! at the crate root.

pub mod constructions;
pub mod drawing;
pub mod geom;
pub mod graph;
pub mod io;
pub mod minkowski;
pub mod ops;
pub mod ratapprox;
pub mod scalar;
pub mod search;
pub mod seeing;
pub mod svg;

pub use drawing::{ConvexityReport, Drawing, DrawingClass, PositionRequirement, Violation};
pub use geom::{Convexity, ConvexityStatus, Location, Orientation, Point};
pub use graph::{Edge, Graph, VertexId};
pub use scalar::{Rational, Scalar};

/// Point with exact coordinates — the type most of the crate works with.
pub type ExactPoint = Point<Scalar>;
/// Drawing with exact coordinates.
pub type ExactDrawing = Drawing<Scalar>;
/// Point used by the floating-point search lane.
pub type FloatPoint = Point<f64>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("sqrt{0} is not a valid field index (need square-free d >= 2)")]
    BadField(u32),
    #[error("mixed quadratic fields sqrt{0} and sqrt{1}")]
    MixedFields(u32, u32),
    #[error("non-finite float cannot be made exact")]
    NonFiniteFloat,
    #[error("empty point set")]
    EmptyPointSet,
    #[error("invalid hull: {0}")]
    BadHull(&'static str),
    #[error("graph error: {0}")]
    Graph(String),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(drawing::Violation),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size {size} exceeds cap {cap} for exhaustive search")]
    SizeCap { size: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
