//! Drawing surgery: lifting weakly convex vertex sets to strictly convex
//! ones, attaching leaves along non-crossing hull edges, and the exhaustive
//! search for vertices that can join the midpoint set.
//!
//! The perturbation operations never try to compute the feasibility bounds of
//! the underlying arguments. They pick an explicit candidate, shrink it
//! geometrically, and accept only once the exact classifier certifies the
//! result; the arguments guarantee termination.

use crate::drawing::{ConvexityReport, Drawing};
use crate::geom::{
    convex_hull, convexity_status, cross_value, orient, segment_meets_open_unchecked, Convexity,
    GeomScalar, Orientation, Point,
};
use crate::graph::{edge, Edge, Graph, VertexId};
use crate::{Error, Result};

const HALVING_BUDGET: usize = 64;

/// Convexity level a subset is required to reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvexityMode {
    Strict,
    Weak,
}

impl ConvexityMode {
    pub fn met_by(self, level: Convexity) -> bool {
        match self {
            ConvexityMode::Strict => level == Convexity::Strict,
            ConvexityMode::Weak => level >= Convexity::WeakNotStrict,
        }
    }
}

/// Does edge `e` cross the open interior of the vertex hull?
pub fn is_v_crossing<T: GeomScalar>(d: &Drawing<T>, e: Edge) -> Result<bool> {
    d.validate().map_err(Error::InvalidDrawing)?;
    if !d.graph().has_edge(e.0, e.1) {
        return Err(Error::Graph(format!("no edge ({}, {})", e.0, e.1)));
    }
    let hull = convex_hull(d.positions())?;
    Ok(segment_meets_open_unchecked(
        d.position(e.0),
        d.position(e.1),
        &hull,
    ))
}

fn two<T: GeomScalar>() -> T {
    T::one() + T::one()
}

/// Moves every vertex that sits in the interior of a vertex-hull edge onto a
/// small outward parabolic bump, turning a (weak, strict) drawing into a
/// (strict, strict) one. The bump height is halved until the exact classifier
/// certifies the result.
pub fn strictify<T: GeomScalar>(d: &Drawing<T>) -> Result<Drawing<T>> {
    let report = d.classify()?;
    if report.levels() != (Convexity::WeakNotStrict, Convexity::Strict) {
        return Err(Error::Precondition(format!(
            "strictify needs (weak, strict), got ({}, {})",
            report.vertex_level(),
            report.midpoint_level()
        )));
    }
    let hull = convex_hull(d.positions())?;
    let h = hull.len();
    // For each non-corner vertex: its hull edge, the fraction along it, and
    // the outward normal of that edge.
    struct Lift<T> {
        vertex: VertexId,
        factor: (T, T), // lambda (1 - lambda) as numerator / denominator
        normal: (T, T),
    }
    let mut lifts: Vec<Lift<T>> = Vec::new();
    'vertices: for (v, p) in d.positions().iter().enumerate() {
        if hull.contains(p) {
            continue;
        }
        for k in 0..h {
            let c0 = &hull[k];
            let c1 = &hull[(k + 1) % h];
            if h == 2 && k == 1 {
                break; // degenerate hull: one geometric edge
            }
            if orient(c0, c1, p) == Orientation::Collinear {
                let (dx, dy) = c1.sub(c0);
                let (px, py) = p.sub(c0);
                let t = px * dx.clone() + py * dy.clone();
                let len2 = dx.clone() * dx.clone() + dy.clone() * dy.clone();
                if t > T::zero() && t < len2 {
                    // lambda = t / len2; lambda (1 - lambda) = t (len2 - t) / len2^2
                    let num = t.clone() * (len2.clone() - t);
                    let den = len2.clone() * len2;
                    // outward normal of a ccw edge
                    lifts.push(Lift {
                        vertex: v,
                        factor: (num, den),
                        normal: (dy, -dx),
                    });
                    continue 'vertices;
                }
            }
        }
        return Err(Error::Precondition(
            "vertex neither a hull corner nor on a hull edge".into(),
        ));
    }
    let mut eps = T::one();
    for _ in 0..HALVING_BUDGET {
        let mut positions = d.positions().to_vec();
        for lift in &lifts {
            let scale = eps.clone() * lift.factor.0.clone() / lift.factor.1.clone();
            positions[lift.vertex] = positions[lift.vertex].add_vec(&(
                scale.clone() * lift.normal.0.clone(),
                scale * lift.normal.1.clone(),
            ));
        }
        let candidate = Drawing::new(d.graph().clone(), positions)?;
        if candidate.validate().is_ok() {
            if let Ok(r) = candidate.classify() {
                if r.levels() == (Convexity::Strict, Convexity::Strict) {
                    return Ok(candidate);
                }
            }
        }
        eps = eps / two::<T>();
    }
    Err(Error::Certification(
        "strictify: halving budget exhausted".into(),
    ))
}

/// Clips `poly` to the closed halfplane left of the directed line `p -> q`.
fn clip_halfplane<T: GeomScalar>(poly: &[Point<T>], p: &Point<T>, q: &Point<T>) -> Vec<Point<T>> {
    let mut out = Vec::new();
    let k = poly.len();
    for i in 0..k {
        let cur = &poly[i];
        let next = &poly[(i + 1) % k];
        let s_cur = cross_value(p, q, cur);
        let s_next = cross_value(p, q, next);
        let c = s_cur.partial_cmp(&T::zero()).expect("incomparable");
        let nx = s_next.partial_cmp(&T::zero()).expect("incomparable");
        use std::cmp::Ordering::*;
        if c != Less {
            out.push(cur.clone());
        }
        if (c == Greater && nx == Less) || (c == Less && nx == Greater) {
            let t = s_cur.clone() / (s_cur - s_next);
            let (dx, dy) = next.sub(cur);
            out.push(cur.add_vec(&(t.clone() * dx, t * dy)));
        }
    }
    out
}

/// A halfplane written as "strictly left of the directed line a -> b".
type HalfPlane<T> = (Point<T>, Point<T>);

/// Constraints keeping every old hull corner a corner while inserting a new
/// point between consecutive ccw corners `hull[slot]` and `hull[slot + 1]`.
fn insertion_halfplanes<T: GeomScalar>(hull: &[Point<T>], slot: usize) -> Vec<HalfPlane<T>> {
    let h = hull.len();
    let prev = &hull[(slot + h - 1) % h];
    let c0 = &hull[slot];
    let c1 = &hull[(slot + 1) % h];
    let next = &hull[(slot + 2) % h];
    vec![
        (c1.clone(), c0.clone()),   // strictly beyond the edge c0 -> c1
        (prev.clone(), c0.clone()), // keeps c0 a corner
        (c1.clone(), next.clone()), // keeps c1 a corner
    ]
}

fn mean_point<T: GeomScalar>(poly: &[Point<T>]) -> Point<T> {
    let mut sx = T::zero();
    let mut sy = T::zero();
    for p in poly {
        sx = sx + p.x.clone();
        sy = sy + p.y.clone();
    }
    let mut count = T::zero();
    for _ in poly {
        count = count + T::one();
    }
    Point::new(sx / count.clone(), sy / count)
}

fn strictly_inside_all<T: GeomScalar>(p: &Point<T>, halfplanes: &[HalfPlane<T>]) -> bool {
    halfplanes
        .iter()
        .all(|(a, b)| orient(a, b, p) == Orientation::CounterClockwise)
}

fn attach_candidate<T: GeomScalar>(
    d: &Drawing<T>,
    attach_to: VertexId,
    w: Point<T>,
) -> Result<Drawing<T>> {
    let n = d.vertex_count();
    let mut edges: Vec<Edge> = d.graph().edges().to_vec();
    edges.push((attach_to, n));
    let graph = Graph::new(n + 1, edges)?;
    let mut positions = d.positions().to_vec();
    positions.push(w);
    Drawing::new(graph, positions)
}

fn certify_strict_strict<T: GeomScalar>(candidate: &Drawing<T>) -> bool {
    candidate.validate().is_ok()
        && candidate
            .classify()
            .map(|r| r.levels() == (Convexity::Strict, Convexity::Strict))
            .unwrap_or(false)
}

/// Attaches a new leaf to `v`, where `(u, v)` is a non-crossing edge of a
/// (strict, strict) drawing. The new vertex lands just outside the vertex
/// hull near `u`; its edge midpoint lands just outside the midpoint hull near
/// the midpoint of `uv`. The initial placement is the mean of the exact
/// feasible region; on certification failure it is halved toward the midpoint
/// of `uv`.
pub fn add_leaf<T: GeomScalar>(d: &Drawing<T>, uv: Edge) -> Result<Drawing<T>> {
    let (u, v) = uv;
    let report = d.classify()?;
    if report.levels() != (Convexity::Strict, Convexity::Strict) {
        return Err(Error::Precondition(format!(
            "add_leaf needs (strict, strict), got ({}, {})",
            report.vertex_level(),
            report.midpoint_level()
        )));
    }
    if is_v_crossing(d, uv)? {
        return Err(Error::Precondition(format!(
            "edge ({u}, {v}) crosses the vertex hull interior"
        )));
    }
    let m_e = d.position(u).midpoint(d.position(v));

    // Tiny drawings: a quarter turn of u around v always works.
    if d.vertex_count() == 2 {
        let (dx, dy) = d.position(u).sub(d.position(v));
        for rot in [(-dy.clone(), dx.clone()), (dy, -dx)] {
            let w = d.position(v).add_vec(&rot);
            let candidate = attach_candidate(d, v, w)?;
            if certify_strict_strict(&candidate) {
                return Ok(candidate);
            }
        }
        return Err(Error::Certification("add_leaf: no valid placement".into()));
    }

    let vertex_hull = convex_hull(d.positions())?;
    let iu = vertex_hull
        .iter()
        .position(|p| p == d.position(u))
        .expect("strictly convex vertex is a hull corner");
    let h = vertex_hull.len();
    let mids = d.midpoints();
    let mid_hull = convex_hull(&mids)?;

    // Candidate feasible regions for the new midpoint mu: insert mu next to
    // the midpoint of uv in the midpoint hull (when it has corners to spare)
    // and simultaneously insert w = 2 mu - v next to u in the vertex hull.
    // The w-side halfplanes pull back through mu = (w + v) / 2.
    let mut mu_slot_sets: Vec<Vec<HalfPlane<T>>> = Vec::new();
    if mid_hull.len() >= 3 {
        let ie = mid_hull
            .iter()
            .position(|p| *p == m_e)
            .expect("strictly convex midpoint is a hull corner");
        mu_slot_sets.push(insertion_halfplanes(&mid_hull, ie));
        mu_slot_sets.push(insertion_halfplanes(
            &mid_hull,
            (ie + mid_hull.len() - 1) % mid_hull.len(),
        ));
    } else {
        // One or two midpoints: any generic placement keeps them strict.
        mu_slot_sets.push(Vec::new());
    }
    let mut w_slot_sets: Vec<Vec<HalfPlane<T>>> = Vec::new();
    for slot in [iu, (iu + h - 1) % h] {
        let pulled: Vec<HalfPlane<T>> = insertion_halfplanes(&vertex_hull, slot)
            .into_iter()
            .map(|(a, b)| (a.midpoint(d.position(v)), b.midpoint(d.position(v))))
            .collect();
        w_slot_sets.push(pulled);
    }

    // Bounding box large enough to contain every bounded feasible region.
    let bbox = {
        let (mut lo_x, mut hi_x) = (d.positions()[0].x.clone(), d.positions()[0].x.clone());
        let (mut lo_y, mut hi_y) = (d.positions()[0].y.clone(), d.positions()[0].y.clone());
        for p in d.positions().iter().chain(mids.iter()) {
            if p.x < lo_x {
                lo_x = p.x.clone();
            }
            if p.x > hi_x {
                hi_x = p.x.clone();
            }
            if p.y < lo_y {
                lo_y = p.y.clone();
            }
            if p.y > hi_y {
                hi_y = p.y.clone();
            }
        }
        let pad = (hi_x.clone() - lo_x.clone()) + (hi_y.clone() - lo_y.clone()) + T::one();
        vec![
            Point::new(lo_x.clone() - pad.clone(), lo_y.clone() - pad.clone()),
            Point::new(hi_x.clone() + pad.clone(), lo_y - pad.clone()),
            Point::new(hi_x + pad.clone(), hi_y.clone() + pad.clone()),
            Point::new(lo_x - pad.clone(), hi_y + pad),
        ]
    };

    for mu_set in &mu_slot_sets {
        for w_set in &w_slot_sets {
            let mut all: Vec<HalfPlane<T>> = mu_set.clone();
            all.extend(w_set.iter().cloned());
            let mut region = bbox.clone();
            for (a, b) in &all {
                region = clip_halfplane(&region, a, b);
                if region.len() < 3 {
                    break;
                }
            }
            if region.len() < 3 {
                continue;
            }
            let seed = mean_point(&region);
            if !strictly_inside_all(&seed, &all) {
                continue; // region degenerate (zero area)
            }
            // Halve toward the midpoint of uv; every constraint either
            // vanishes there or holds strictly at it, so membership persists.
            let mut mu = seed;
            for _ in 0..HALVING_BUDGET {
                let w = Point::new(
                    two::<T>() * mu.x.clone() - d.position(v).x.clone(),
                    two::<T>() * mu.y.clone() - d.position(v).y.clone(),
                );
                let candidate = attach_candidate(d, v, w)?;
                if certify_strict_strict(&candidate) {
                    return Ok(candidate);
                }
                mu = mu.midpoint(&m_e);
            }
        }
    }
    Err(Error::Certification(
        "add_leaf: no feasible placement certified".into(),
    ))
}

/// Result of the exhaustive search for vertices that can join the midpoints.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub count: usize,
    pub witness: Vec<VertexId>,
    /// Every incident edge of a witness vertex is seen by its other endpoint
    /// (checked, expected to always hold).
    pub added_edges_seen_by_other_end: bool,
}

/// Visits `k`-subsets of `0..n` in lexicographic order until `f` returns
/// true; reports whether any call did.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return false;
    }
    loop {
        if f(&idx) {
            return true;
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

const AUGMENT_CAP: usize = 20;

/// Largest vertex subset whose union with the midpoint set still meets
/// `mode`, found by exhaustive subset enumeration (largest size first,
/// lexicographic within a size). Capped at 20 vertices.
pub fn augmentable_vertices<T: GeomScalar>(
    d: &Drawing<T>,
    mode: ConvexityMode,
) -> Result<Augmentation> {
    d.validate().map_err(Error::InvalidDrawing)?;
    let n = d.vertex_count();
    if n > AUGMENT_CAP {
        return Err(Error::SizeCap {
            size: n,
            cap: AUGMENT_CAP,
        });
    }
    let mids = d.midpoints();
    let mut found: Option<Vec<VertexId>> = None;
    for k in (0..=n).rev() {
        let hit = for_each_combination(n, k, |subset| {
            let mut pts: Vec<Point<T>> = subset.iter().map(|&v| d.position(v).clone()).collect();
            pts.extend(mids.iter().cloned());
            if mode.met_by(convexity_status(&pts).level()) {
                found = Some(subset.to_vec());
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    let witness = found.unwrap_or_default();
    // Each added vertex's incident edges must be seen by the opposite end.
    let mid_hull = if mids.is_empty() {
        Vec::new()
    } else {
        convex_hull(&mids)?
    };
    let edges = d.graph().edges();
    let mut seen_ok = true;
    for &v in &witness {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == v || b == v {
                let other = if a == v { b } else { a };
                let visible = !segment_meets_open_unchecked(d.position(other), &mids[i], &mid_hull);
                if !visible {
                    seen_ok = false;
                }
            }
        }
    }
    Ok(Augmentation {
        count: witness.len(),
        witness,
        added_edges_seen_by_other_end: seen_ok,
    })
}

/// Removes degree-2 vertex `v` and joins its two neighbors. Fails when the
/// neighbors are already adjacent or when the new drawing is invalid; the
/// classification of the result is returned for the caller to judge.
pub fn suppress_degree2<T: GeomScalar>(
    d: &Drawing<T>,
    v: VertexId,
) -> Result<(Drawing<T>, ConvexityReport<T>)> {
    let neighbors = d.graph().neighbors(v);
    if neighbors.len() != 2 {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {}, need 2",
            neighbors.len()
        )));
    }
    let (a, b) = (neighbors[0], neighbors[1]);
    if d.graph().has_edge(a, b) {
        return Err(Error::Precondition(format!(
            "neighbors {a} and {b} are already adjacent"
        )));
    }
    let keep: Vec<VertexId> = (0..d.vertex_count()).filter(|&x| x != v).collect();
    let relabel = |x: VertexId| if x > v { x - 1 } else { x };
    let mut edges: Vec<Edge> = d
        .graph()
        .edges()
        .iter()
        .filter(|&&(p, q)| p != v && q != v)
        .map(|&(p, q)| edge(relabel(p), relabel(q)))
        .collect();
    edges.push(edge(relabel(a), relabel(b)));
    let graph = Graph::new(d.vertex_count() - 1, edges)?;
    let positions = keep.iter().map(|&x| d.position(x).clone()).collect();
    let out = Drawing::new(graph, positions)?;
    let report = out.classify()?;
    Ok((out, report))
}
