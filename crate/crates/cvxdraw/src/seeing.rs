//! Visibility of edges from vertices, the per-vertex interior/exterior edge
//! partition along the vertex hull, and the seeing profile used by the
//! edge-count bounds.
//!
//! A vertex `v` sees an edge `e` when the segment from `v` to the midpoint of
//! `e` avoids the open interior of the midpoint hull. Whenever the vertex set
//! is weakly convex, the neighbors of `v` are ordered by their clockwise
//! appearance along the vertex hull boundary starting at `v`; the first and
//! last neighbors span the exterior edges of `v`, everything in between is
//! interior to `v`.

use std::cmp::Ordering;

use crate::drawing::Drawing;
use crate::geom::{
    convex_hull, locate_unchecked, orient, segment_meets_open_unchecked, GeomScalar, Location,
    Orientation, Point,
};
use crate::graph::{edge, Edge, VertexId};
use crate::{Error, Result};

/// Position of a point along the boundary of a ccw hull: edge index plus the
/// (unnormalized) progress along that edge. Progress values on the same edge
/// share a denominator, so comparing them directly is exact.
struct BoundaryParam<T> {
    edge_index: usize,
    progress: T,
}

fn boundary_param<T: GeomScalar>(p: &Point<T>, hull: &[Point<T>]) -> Option<BoundaryParam<T>> {
    let h = hull.len();
    for k in 0..h {
        let c0 = &hull[k];
        if p == c0 {
            return Some(BoundaryParam {
                edge_index: k,
                progress: T::zero(),
            });
        }
        let c1 = &hull[(k + 1) % h];
        if orient(c0, c1, p) == Orientation::Collinear {
            let (dx, dy) = c1.sub(c0);
            let (px, py) = p.sub(c0);
            let t = px * dx.clone() + py * dy.clone();
            let len2 = dx.clone() * dx + dy.clone() * dy;
            if t > T::zero() && t < len2 {
                return Some(BoundaryParam {
                    edge_index: k,
                    progress: t,
                });
            }
        }
    }
    None
}

/// Incident edges of one vertex split by the hull-boundary neighbor order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub vertex: VertexId,
    pub exterior: Vec<Edge>,
    pub interior: Vec<Edge>,
}

/// Splits the edges at `v` into at most two exterior edges and the interior
/// rest. Requires a valid drawing with a weakly convex vertex set and
/// `deg(v) >= 1`.
pub fn edge_partition<T: GeomScalar>(d: &Drawing<T>, v: VertexId) -> Result<EdgePartition> {
    d.validate().map_err(Error::InvalidDrawing)?;
    let neighbors = d.graph().neighbors(v);
    if neighbors.is_empty() {
        return Err(Error::Precondition(format!("vertex {v} has degree 0")));
    }
    let hull = convex_hull(d.positions())?;
    partition_with_hull(d, v, &neighbors, &hull)
}

fn partition_with_hull<T: GeomScalar>(
    d: &Drawing<T>,
    v: VertexId,
    neighbors: &[VertexId],
    hull: &[Point<T>],
) -> Result<EdgePartition> {
    if neighbors.len() <= 2 {
        return Ok(EdgePartition {
            vertex: v,
            exterior: neighbors.iter().map(|&u| edge(v, u)).collect(),
            interior: vec![],
        });
    }
    let not_convex = || Error::Precondition("vertex set is not weakly convex".to_string());
    let vp = boundary_param(d.position(v), hull).ok_or_else(not_convex)?;
    let h = hull.len();
    // Sort key: counterclockwise walk distance from v, as (edge offset,
    // progress). Neighbors behind v on v's own edge wrap to the end.
    let mut keyed: Vec<(usize, T, VertexId)> = Vec::with_capacity(neighbors.len());
    for &u in neighbors {
        let up = boundary_param(d.position(u), hull).ok_or_else(not_convex)?;
        let same_edge = up.edge_index == vp.edge_index;
        let offset = if same_edge && up.progress < vp.progress {
            h
        } else {
            (up.edge_index + h - vp.edge_index) % h
        };
        keyed.push((offset, up.progress, u));
    }
    keyed.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.partial_cmp(&b.1).expect("incomparable progress"),
        o => o,
    });
    // keyed is the counterclockwise order; clockwise is its reverse.
    let cw: Vec<VertexId> = keyed.into_iter().rev().map(|(_, _, u)| u).collect();
    let first = cw[0];
    let last = *cw.last().unwrap();
    Ok(EdgePartition {
        vertex: v,
        exterior: vec![edge(v, first), edge(v, last)],
        interior: cw[1..cw.len() - 1].iter().map(|&u| edge(v, u)).collect(),
    })
}

/// Does `v` see edge `e`? True iff the segment from `v` to the midpoint of
/// `e` avoids the open interior of the midpoint hull.
pub fn sees<T: GeomScalar>(d: &Drawing<T>, v: VertexId, e: Edge) -> Result<bool> {
    d.validate().map_err(Error::InvalidDrawing)?;
    if !d.graph().has_edge(e.0, e.1) {
        return Err(Error::Graph(format!("no edge ({}, {})", e.0, e.1)));
    }
    let mid_hull = convex_hull(&d.midpoints())?;
    Ok(!segment_meets_open_unchecked(
        d.position(v),
        &d.midpoint_of(edge(e.0, e.1)),
        &mid_hull,
    ))
}

/// Seeing behavior of a single vertex.
#[derive(Clone, Debug)]
pub struct VertexSeeing {
    pub vertex: VertexId,
    pub seen_incident: usize,
    /// Incident edges this vertex sees.
    pub seen: Vec<Edge>,
    pub exterior: Vec<Edge>,
    pub interior: Vec<Edge>,
}

/// Counts of how vertices see their incident edges, plus the derived edge
/// statistics. `n0/n1/n2` count vertices seeing 0/1/2 incident edges;
/// vertices seeing more (possible only in degenerate situations) land in
/// `n_many`. An edge is good when both endpoints see it, doubly exterior when
/// it is exterior at both endpoints.
#[derive(Clone, Debug)]
pub struct SeeingProfile {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n_many: usize,
    pub good_edges: usize,
    pub doubly_exterior: usize,
    pub unseen_edges: Vec<Edge>,
    /// True when the midpoint hull has an empty interior (fewer than three
    /// corners). Every vertex then sees every edge and the accounting
    /// identity below is not meaningful.
    pub degenerate_midpoint_hull: bool,
    pub per_vertex: Vec<VertexSeeing>,
}

impl SeeingProfile {
    /// The accounting identity `m = n1 + 2 n2 - good_edges`. Holds whenever
    /// every edge is seen at least once, no vertex sees three or more
    /// incident edges, and the midpoint hull is non-degenerate.
    pub fn accounting_identity_holds(&self, edge_count: usize) -> bool {
        !self.degenerate_midpoint_hull
            && self.n_many == 0
            && self.unseen_edges.is_empty()
            && self.n1 + 2 * self.n2 == edge_count + self.good_edges
    }
}

/// Full seeing profile of a valid drawing with a weakly convex vertex set.
pub fn seeing_profile<T: GeomScalar>(d: &Drawing<T>) -> Result<SeeingProfile> {
    d.validate().map_err(Error::InvalidDrawing)?;
    let hull = convex_hull(d.positions())?;
    for p in d.positions() {
        if locate_unchecked(p, &hull) == Location::Interior {
            return Err(Error::Precondition(
                "vertex set is not weakly convex".to_string(),
            ));
        }
    }
    let mids = d.midpoints();
    let mid_hull = if mids.is_empty() {
        Vec::new()
    } else {
        convex_hull(&mids)?
    };
    let degenerate = mid_hull.len() < 3;

    let n = d.vertex_count();
    let edges = d.graph().edges();
    let mut seen_by: Vec<(bool, bool)> = vec![(false, false); edges.len()];
    let mut per_vertex = Vec::with_capacity(n);
    let (mut n0, mut n1, mut n2, mut n_many) = (0, 0, 0, 0);
    for v in 0..n {
        let neighbors = d.graph().neighbors(v);
        let mut seen: Vec<Edge> = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            if e.0 == v || e.1 == v {
                let visible = !segment_meets_open_unchecked(d.position(v), &mids[i], &mid_hull);
                if visible {
                    seen.push(e);
                    if e.0 == v {
                        seen_by[i].0 = true;
                    } else {
                        seen_by[i].1 = true;
                    }
                }
            }
        }
        match seen.len() {
            0 => n0 += 1,
            1 => n1 += 1,
            2 => n2 += 1,
            _ => n_many += 1,
        }
        let (exterior, interior) = if neighbors.is_empty() {
            (vec![], vec![])
        } else {
            let part = partition_with_hull(d, v, &neighbors, &hull)?;
            (part.exterior, part.interior)
        };
        per_vertex.push(VertexSeeing {
            vertex: v,
            seen_incident: seen.len(),
            seen,
            exterior,
            interior,
        });
    }
    let good_edges = seen_by.iter().filter(|&&(a, b)| a && b).count();
    let unseen_edges = edges
        .iter()
        .zip(&seen_by)
        .filter(|&(_, &(a, b))| !a && !b)
        .map(|(&e, _)| e)
        .collect();
    let doubly_exterior = edges
        .iter()
        .filter(|&&(u, v)| {
            per_vertex[u].exterior.contains(&(u, v)) && per_vertex[v].exterior.contains(&(u, v))
        })
        .count();
    Ok(SeeingProfile {
        n0,
        n1,
        n2,
        n_many,
        good_edges,
        doubly_exterior,
        unseen_edges,
        degenerate_midpoint_hull: degenerate,
        per_vertex,
    })
}
