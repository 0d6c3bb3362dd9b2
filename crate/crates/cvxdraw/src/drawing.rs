//! Straight-line drawings: a graph plus exact vertex positions, their
//! validity invariants, and the convexity classification of vertex and
//! edge-midpoint sets.

use std::fmt;

use crate::geom::{convexity_status, Convexity, ConvexityStatus, GeomScalar, Point};
use crate::graph::{Edge, Graph, VertexId};
use crate::{Error, Result, Scalar};

/// What a drawing class demands of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PositionRequirement {
    Strict,
    Weak,
    Any,
}

impl PositionRequirement {
    pub fn satisfied_by(self, level: Convexity) -> bool {
        match self {
            PositionRequirement::Strict => level == Convexity::Strict,
            PositionRequirement::Weak => level >= Convexity::WeakNotStrict,
            PositionRequirement::Any => true,
        }
    }

    pub fn code(self) -> char {
        match self {
            PositionRequirement::Strict => 's',
            PositionRequirement::Weak => 'w',
            PositionRequirement::Any => 'a',
        }
    }

    pub fn from_code(c: char) -> Result<Self> {
        match c {
            's' => Ok(PositionRequirement::Strict),
            'w' => Ok(PositionRequirement::Weak),
            'a' => Ok(PositionRequirement::Any),
            _ => Err(Error::Parse(format!("unknown requirement `{c}`"))),
        }
    }
}

/// A pair of requirements: one for the vertex set, one for the midpoint set.
/// The two-letter codes run vertex first: `sw` means strict vertices and
/// weakly convex midpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DrawingClass {
    pub vertices: PositionRequirement,
    pub midpoints: PositionRequirement,
}

impl DrawingClass {
    pub const fn new(vertices: PositionRequirement, midpoints: PositionRequirement) -> Self {
        DrawingClass {
            vertices,
            midpoints,
        }
    }

    pub fn parse(code: &str) -> Result<Self> {
        let mut chars = code.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(v), Some(m), None) => Ok(DrawingClass {
                vertices: PositionRequirement::from_code(v)?,
                midpoints: PositionRequirement::from_code(m)?,
            }),
            _ => Err(Error::Parse(format!("bad class code `{code}`"))),
        }
    }

    pub fn all() -> [DrawingClass; 9] {
        use PositionRequirement::*;
        let mut out = [DrawingClass::new(Strict, Strict); 9];
        let levels = [Strict, Weak, Any];
        let mut k = 0;
        for &v in &levels {
            for &m in &levels {
                out[k] = DrawingClass::new(v, m);
                k += 1;
            }
        }
        out
    }
}

impl fmt::Display for DrawingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertices.code(), self.midpoints.code())
    }
}

/// A validity violation: which points of the drawing coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexPair(VertexId, VertexId),
    MidpointPair(Edge, Edge),
    VertexOnMidpoint(VertexId, Edge),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexPair(u, v) => write!(f, "vertices {u} and {v} coincide"),
            Violation::MidpointPair((a, b), (c, d)) => {
                write!(f, "midpoints of edges ({a}, {b}) and ({c}, {d}) coincide")
            }
            Violation::VertexOnMidpoint(v, (a, b)) => {
                write!(
                    f,
                    "vertex {v} coincides with the midpoint of edge ({a}, {b})"
                )
            }
        }
    }
}

/// A straight-line drawing. The structure itself only guarantees that every
/// vertex has a position over one common scalar field; the coincidence-free
/// invariants are checked by [`Drawing::validate`], so invalid drawings can
/// be represented (and reported on) after parsing a file.
#[derive(Clone, Debug, PartialEq)]
pub struct Drawing<T> {
    graph: Graph,
    positions: Vec<Point<T>>,
}

impl<T: GeomScalar> Drawing<T> {
    pub fn new(graph: Graph, positions: Vec<Point<T>>) -> Result<Self> {
        if positions.len() != graph.vertex_count() {
            return Err(Error::Graph(format!(
                "{} positions for {} vertices",
                positions.len(),
                graph.vertex_count()
            )));
        }
        Ok(Drawing { graph, positions })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point<T>] {
        &self.positions
    }

    pub fn position(&self, v: VertexId) -> &Point<T> {
        &self.positions[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Midpoints of all edges, in edge-list order.
    pub fn midpoints(&self) -> Vec<Point<T>> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| self.positions[u].midpoint(&self.positions[v]))
            .collect()
    }

    pub fn midpoint_of(&self, e: Edge) -> Point<T> {
        self.positions[e.0].midpoint(&self.positions[e.1])
    }

    /// Checks the three coincidence-free invariants: distinct vertex points,
    /// distinct edge midpoints, and no vertex on a midpoint.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.positions.len();
        for u in 0..n {
            for v in u + 1..n {
                if self.positions[u] == self.positions[v] {
                    return Err(Violation::VertexPair(u, v));
                }
            }
        }
        let mids = self.midpoints();
        let edges = self.graph.edges();
        for i in 0..mids.len() {
            for j in i + 1..mids.len() {
                if mids[i] == mids[j] {
                    return Err(Violation::MidpointPair(edges[i], edges[j]));
                }
            }
        }
        for v in 0..n {
            for (i, m) in mids.iter().enumerate() {
                if self.positions[v] == *m {
                    return Err(Violation::VertexOnMidpoint(v, edges[i]));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Classifies vertex and midpoint sets. Fails on invalid drawings.
    pub fn classify(&self) -> Result<ConvexityReport<T>> {
        self.validate().map_err(Error::InvalidDrawing)?;
        Ok(ConvexityReport {
            vertex_status: convexity_status(&self.positions),
            midpoint_status: convexity_status(&self.midpoints()),
        })
    }

    /// Sub-drawing induced on `keep` (relabeled in that order).
    pub fn induced(&self, keep: &[VertexId]) -> Result<Drawing<T>> {
        let graph = self.graph.induced(keep)?;
        let positions = keep.iter().map(|&v| self.positions[v].clone()).collect();
        Drawing::new(graph, positions)
    }

    /// Same graph, positions mapped through `f`.
    pub fn map_positions<U: GeomScalar>(&self, f: impl Fn(&Point<T>) -> Point<U>) -> Drawing<U> {
        Drawing {
            graph: self.graph.clone(),
            positions: self.positions.iter().map(f).collect(),
        }
    }
}

impl Drawing<Scalar> {
    /// The common quadratic field of all coordinates, or an error when two
    /// distinct square roots are mixed.
    pub fn field(&self) -> Result<Option<u32>> {
        common_field(self.positions.iter())
    }

    /// Construction that also enforces the single-field invariant.
    pub fn new_exact(graph: Graph, positions: Vec<Point<Scalar>>) -> Result<Self> {
        common_field(positions.iter())?;
        Drawing::new(graph, positions)
    }
}

pub(crate) fn common_field<'a>(
    points: impl Iterator<Item = &'a Point<Scalar>>,
) -> Result<Option<u32>> {
    let mut field: Option<u32> = None;
    for p in points {
        for d in [p.x.field(), p.y.field()].into_iter().flatten() {
            match field {
                None => field = Some(d),
                Some(existing) if existing != d => {
                    return Err(Error::MixedFields(existing, d));
                }
                _ => {}
            }
        }
    }
    Ok(field)
}

/// Result of classifying a drawing: the two statuses plus the derived class
/// memberships (monotone in both axes by construction).
#[derive(Clone, Debug)]
pub struct ConvexityReport<T> {
    pub vertex_status: ConvexityStatus<T>,
    pub midpoint_status: ConvexityStatus<T>,
}

impl<T> ConvexityReport<T> {
    pub fn vertex_level(&self) -> Convexity {
        self.vertex_status.level()
    }

    pub fn midpoint_level(&self) -> Convexity {
        self.midpoint_status.level()
    }

    /// Does this drawing witness membership in the given class?
    pub fn witnesses(&self, class: DrawingClass) -> bool {
        class.vertices.satisfied_by(self.vertex_level())
            && class.midpoints.satisfied_by(self.midpoint_level())
    }

    pub fn witnessed_classes(&self) -> Vec<DrawingClass> {
        DrawingClass::all()
            .into_iter()
            .filter(|&c| self.witnesses(c))
            .collect()
    }

    pub fn levels(&self) -> (Convexity, Convexity) {
        (self.vertex_level(), self.midpoint_level())
    }
}
