//! Generators for the drawing families with certified convexity behavior:
//! cycles, complete graphs drawn weakly, the two small separating examples,
//! the ladder-like family attaining the weak-midpoint edge bound, the
//! glued-quadrilateral family attaining the strict-strict bound, hatted
//! even cycles (non-planar for odd hat count), and prisms over cycles.
//!
//! Every generator certifies its output with the exact classifier before
//! returning; size parameters like bump heights are found by halving, not by
//! computing feasibility bounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::drawing::Drawing;
use crate::geom::{Convexity, Point};
use crate::graph::{Edge, Graph, VertexId};
use crate::ratapprox::circle_points;
use crate::scalar::Rational;
use crate::{Error, Result, Scalar};

pub use crate::ops::suppress_degree2;

/// Knobs for the generators: the increasing bump schedule `base^i`, the
/// denominator bound for rational unit-circle points, and how many times a
/// generator may shrink or refine before giving up.
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    pub epsilon_base: u32,
    pub circle_denominator_bound: u64,
    pub retry_budget: u32,
}

impl Default for ConstructionParams {
    fn default() -> Self {
        ConstructionParams {
            epsilon_base: 2,
            circle_denominator_bound: 1000,
            retry_budget: 60,
        }
    }
}

impl ConstructionParams {
    fn check(&self) -> Result<()> {
        if self.epsilon_base < 2 {
            return Err(Error::Precondition(
                "epsilon base must be at least 2 for a strictly increasing schedule".into(),
            ));
        }
        if self.retry_budget < 1 {
            return Err(Error::Precondition("retry budget must be positive".into()));
        }
        Ok(())
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn pt_rat(x: Rational, y: Rational) -> Point<Scalar> {
    Point::new(Scalar::from_rational(x), Scalar::from_rational(y))
}

fn pt_int(x: i64, y: i64) -> Point<Scalar> {
    Point::new(Scalar::from_int(x), Scalar::from_int(y))
}

fn certify(
    d: &Drawing<Scalar>,
    want_vertices: Convexity,
    want_midpoints: Convexity,
    what: &str,
) -> Result<()> {
    let report = d.classify()?;
    if report.vertex_level() < want_vertices || report.midpoint_level() < want_midpoints {
        return Err(Error::Certification(format!(
            "{what}: got ({}, {})",
            report.vertex_level(),
            report.midpoint_level()
        )));
    }
    Ok(())
}

/// Cycle drawn on rational points of the unit circle near the regular
/// polygon. Vertices are strictly convex (they are concyclic), midpoints are
/// strictly convex, and vertices together with midpoints are weakly convex
/// since each midpoint lies on a polygon edge.
pub fn cycle_drawing(n: usize, params: &ConstructionParams) -> Result<Drawing<Scalar>> {
    params.check()?;
    if n < 3 {
        return Err(Error::Precondition("cycle needs n >= 3".into()));
    }
    let mut bound = params.circle_denominator_bound;
    for _ in 0..params.retry_budget {
        let pts = circle_points(n, bound)
            .into_iter()
            .map(|(x, y)| pt_rat(x, y))
            .collect();
        let d = Drawing::new(Graph::cycle(n)?, pts)?;
        if d.validate().is_ok() {
            certify(&d, Convexity::Strict, Convexity::WeakNotStrict, "cycle")?;
            return Ok(d);
        }
        bound = bound.saturating_mul(10);
    }
    Err(Error::Certification("cycle: no valid polygon found".into()))
}

/// Complete graph drawn with weakly convex vertices and midpoints: one vertex
/// at the origin and the rest stacked on the line x = 1 at heights 2^i.
pub fn complete_weak_drawing(n: usize) -> Result<Drawing<Scalar>> {
    if n < 2 {
        return Err(Error::Precondition("complete graph needs n >= 2".into()));
    }
    let mut pts = vec![pt_int(0, 0)];
    let mut h = BigInt::from(2);
    for _ in 1..n {
        pts.push(pt_rat(Rational::one(), Rational::from_integer(h.clone())));
        h *= 2;
    }
    let d = Drawing::new(Graph::complete(n), pts)?;
    certify(
        &d,
        Convexity::WeakNotStrict,
        Convexity::WeakNotStrict,
        "complete graph",
    )?;
    Ok(d)
}

/// The four-vertex graph missing one edge, drawn with strictly convex
/// vertices and weakly convex midpoints.
pub fn k4_minus_e_drawing() -> Result<Drawing<Scalar>> {
    let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?;
    let d = Drawing::new(
        g,
        vec![pt_int(1, 0), pt_int(0, 0), pt_int(0, 1), pt_int(2, 1)],
    )?;
    certify(&d, Convexity::Strict, Convexity::WeakNotStrict, "K4 - e")?;
    Ok(d)
}

/// Complete bipartite 3 + 2 drawing with strictly convex vertices and weakly
/// convex midpoints. Part of size three first (ids 0..3), then the pair.
pub fn k23_drawing() -> Result<Drawing<Scalar>> {
    let g = Graph::complete_bipartite(3, 2);
    let d = Drawing::new(
        g,
        vec![
            pt_int(0, 0),
            pt_int(4, 0),
            pt_int(3, 2),
            pt_int(1, 1),
            pt_int(4, 1),
        ],
    )?;
    certify(&d, Convexity::Strict, Convexity::WeakNotStrict, "K23")?;
    Ok(d)
}

/// Two paths `u_1..u_p` and `v_1..v_q` (p = floor(n/2), q = ceil(n/2))
/// joined by `u_1 v_1`, `u_i v_{i-1}`, and `u_{j-1} v_j`; always `2n - 3`
/// edges. Vertex ids: `u_i -> i - 1`, `v_j -> p + j - 1`.
pub fn ln_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition("ladder family needs n >= 2".into()));
    }
    let p = n / 2;
    let q = n - p;
    let u = |i: usize| i - 1;
    let v = |j: usize| p + j - 1;
    let mut edges: Vec<Edge> = Vec::with_capacity(2 * n - 3);
    for i in 1..p {
        edges.push((u(i), u(i + 1)));
    }
    for j in 1..q {
        edges.push((v(j), v(j + 1)));
    }
    edges.push((u(1), v(1)));
    for i in 2..=p {
        edges.push((u(i), v(i - 1)));
    }
    for j in 2..=q {
        edges.push((u(j - 1), v(j)));
    }
    Graph::new(n, edges)
}

/// Sum of the bump schedule: delta_j = sum of base^i for i in j..=top.
fn tail_sum(base: u32, j: usize, top: usize) -> Rational {
    let b = BigInt::from(base);
    let num = b.pow(top as u32 + 1) - b.pow(j as u32);
    Rational::new(num, BigInt::from(base) - BigInt::one())
}

/// Drawing of the ladder family with strictly convex vertices and midpoints
/// on two vertical lines. Native for n = 4k + 2; other sizes restrict the
/// next native drawing to an induced prefix (deleting tail path vertices
/// keeps both convexity levels). For n >= 4 the midpoint set is weakly but
/// not strictly convex; n = 2, 3 are degenerate and come out strict.
pub fn ln_drawing(n: usize, params: &ConstructionParams) -> Result<Drawing<Scalar>> {
    params.check()?;
    if n < 2 {
        return Err(Error::Precondition("ladder family needs n >= 2".into()));
    }
    let native = n + (6 - n % 4) % 4;
    debug_assert!(native % 4 == 2 && native >= n);
    let k = (native - 2) / 4;
    let base = params.epsilon_base;
    let delta = |idx: usize| tail_sum(base, idx, 2 * k);
    let x_of = |i: usize| -> Rational {
        if i % 2 == 1 {
            Rational::from_integer(BigInt::from((i as i64 - 1) / 2))
        } else {
            Rational::from_integer(BigInt::from(-(i as i64) / 2))
        }
    };
    let p = n / 2;
    let q = n - p;
    let mut pts = Vec::with_capacity(n);
    for i in 1..=p {
        pts.push(pt_rat(x_of(i), delta(i - 1)));
    }
    for j in 1..=q {
        pts.push(pt_rat(x_of(j), -delta(j - 1)));
    }
    let d = Drawing::new(ln_graph(n)?, pts)?;
    if d.edge_count() != 2 * n - 3 {
        return Err(Error::Certification(format!(
            "ladder drawing has {} edges, expected {}",
            d.edge_count(),
            2 * n - 3
        )));
    }
    certify(&d, Convexity::Strict, Convexity::WeakNotStrict, "ladder")?;
    Ok(d)
}

/// A triangle and (n-3)/2 quadrilaterals glued along one shared edge `uv`.
/// Ids: u = 0, v = 1, apex w = 2, left column 3..3+m, right column mirrored,
/// with the i-th left vertex joined to the (m+1-i)-th right vertex.
pub fn bn_graph(n: usize) -> Result<Graph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Precondition("glued family needs odd n >= 3".into()));
    }
    let m = (n - 3) / 2;
    let pl = |i: usize| 2 + i;
    let pr = |i: usize| 2 + m + i;
    let mut edges: Vec<Edge> = vec![(0, 1), (0, 2), (1, 2)];
    for i in 1..=m {
        edges.push((0, pl(i)));
        edges.push((1, pr(i)));
        edges.push((pl(i), pr(m + 1 - i)));
    }
    Graph::new(n, edges)
}

type RatPoint = (Rational, Rational);

fn rcross(o: &RatPoint, a: &RatPoint, b: &RatPoint) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn rmid(a: &RatPoint, b: &RatPoint) -> RatPoint {
    ((&a.0 + &b.0) / rat(2, 1), (&a.1 + &b.1) / rat(2, 1))
}

/// Vertex positions of the glued family in graph-id order, as a function of
/// the apex drop factor `W`: columns at `x = +-(4 - 3/2^i)` with heights
/// `i - eps 2^i`, apex at `(0, m + 1 - 2 W eps)`. The shrinking x-gaps make
/// the column chains strictly convex while the convex height corrections
/// dome the diagonal midpoints; `W` places the apex-edge midpoints onto that
/// dome.
fn bn_positions(m: usize, eps: &Rational, w_factor: &Rational) -> Vec<RatPoint> {
    let two_i = |i: usize| Rational::from_integer(BigInt::from(2).pow(i as u32));
    let h = rat(m as i64 + 1, 1) - rat(2, 1) * w_factor * eps;
    let mut pts = vec![
        (rat(-1, 1), rat(0, 1)),
        (rat(1, 1), rat(0, 1)),
        (rat(0, 1), h),
    ];
    let mut rights = Vec::with_capacity(m);
    for i in 1..=m {
        let x = rat(4, 1) - rat(3, 1) / two_i(i);
        let y = rat(i as i64, 1) - eps * two_i(i);
        pts.push((-&x, y.clone()));
        rights.push((x, y));
    }
    pts.extend(rights);
    pts
}

/// The intended ccw midpoint polygon for the glued family. The order only
/// depends on the fixed x-coordinates: bottom midpoint, right column, then
/// the top dome (diagonal midpoints by decreasing x with the two apex-edge
/// midpoints slotted in at x = 1/2 and x = -1/2), then the left column back
/// down.
fn bn_mid_polygon(m: usize, pos: &[RatPoint]) -> Vec<RatPoint> {
    let (u, v, w) = (&pos[0], &pos[1], &pos[2]);
    let pl = |i: usize| &pos[2 + i];
    let pr = |i: usize| &pos[2 + m + i];
    let mut poly = vec![rmid(u, v)];
    for i in 1..=m {
        poly.push(rmid(v, pr(i)));
    }
    let caps: Vec<RatPoint> = (1..=m).map(|i| rmid(pl(i), pr(m + 1 - i))).collect();
    let mut top: Vec<RatPoint> = Vec::with_capacity(m + 2);
    let m_wv = rmid(w, v);
    let m_uw = rmid(u, w);
    let half = rat(1, 2);
    let mut wv_placed = false;
    for c in &caps {
        if !wv_placed && c.0 < half {
            top.push(m_wv.clone());
            wv_placed = true;
        }
        top.push(c.clone());
    }
    if !wv_placed {
        top.push(m_wv);
    }
    let neg_half = rat(-1, 2);
    let mut uw_placed = false;
    for c in top {
        if !uw_placed && c.0 < neg_half {
            poly.push(m_uw.clone());
            uw_placed = true;
        }
        poly.push(c);
    }
    if !uw_placed {
        poly.push(m_uw);
    }
    for i in (1..=m).rev() {
        poly.push(rmid(u, pl(i)));
    }
    poly
}

/// One attempt at the given bump scale: every convexity constraint of the two
/// planned polygons is affine in the apex drop factor, so two evaluations per
/// constraint yield an exact feasibility window for it. Returns the certified
/// drawing for the window midpoint, or None when the window is empty.
fn bn_attempt(n: usize, m: usize, eps: &Rational) -> Result<Option<Drawing<Scalar>>> {
    let pos0 = bn_positions(m, eps, &rat(0, 1));
    let pos1 = bn_positions(m, eps, &rat(1, 1));
    let vertex_order: Vec<usize> = {
        let mut order = vec![0usize, 1];
        order.extend((1..=m).map(|i| 2 + m + i));
        order.push(2);
        order.extend((1..=m).rev().map(|i| 2 + i));
        order
    };
    let vpoly = |pos: &[RatPoint]| -> Vec<RatPoint> {
        vertex_order.iter().map(|&i| pos[i].clone()).collect()
    };
    let polys0 = [vpoly(&pos0), bn_mid_polygon(m, &pos0)];
    let polys1 = [vpoly(&pos1), bn_mid_polygon(m, &pos1)];
    let mut lo = rat(0, 1);
    let mut hi = Rational::from_integer(BigInt::from(2).pow(m as u32 + 3));
    for (p0, p1) in polys0.iter().zip(polys1.iter()) {
        let k = p0.len();
        for i in 0..k {
            let f0 = rcross(&p0[i], &p0[(i + 1) % k], &p0[(i + 2) % k]);
            let f1 = rcross(&p1[i], &p1[(i + 1) % k], &p1[(i + 2) % k]);
            let slope = &f1 - &f0;
            if slope.is_zero() {
                if !f0.is_positive() {
                    return Ok(None);
                }
            } else {
                let root = -&f0 / &slope;
                if slope.is_positive() {
                    if root > lo {
                        lo = root;
                    }
                } else if root < hi {
                    hi = root;
                }
            }
        }
    }
    if lo >= hi {
        return Ok(None);
    }
    let w_mid = (&lo + &hi) / rat(2, 1);
    let pts = bn_positions(m, eps, &w_mid)
        .into_iter()
        .map(|(x, y)| pt_rat(x, y))
        .collect();
    let d = Drawing::new(bn_graph(n)?, pts)?;
    if d.validate().is_ok() {
        if let Ok(report) = d.classify() {
            if report.levels() == (Convexity::Strict, Convexity::Strict) {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}

/// Drawing of the glued family with strictly convex vertices and midpoints,
/// `3(n-1)/2` edges, for every odd n >= 3. The bump scale is halved until an
/// apex window exists and the exact classifier certifies.
pub fn bn_drawing(n: usize, params: &ConstructionParams) -> Result<Drawing<Scalar>> {
    params.check()?;
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Precondition("glued family needs odd n >= 3".into()));
    }
    let m = (n - 3) / 2;
    if m == 0 {
        let d = Drawing::new(
            bn_graph(3)?,
            vec![pt_int(-1, 0), pt_int(1, 0), pt_int(0, 1)],
        )?;
        certify(&d, Convexity::Strict, Convexity::Strict, "triangle")?;
        return Ok(d);
    }
    let mut eps = Rational::new(BigInt::one(), BigInt::from(2).pow(m as u32 + 2));
    let mut result = None;
    for _ in 0..params.retry_budget {
        if let Some(d) = bn_attempt(n, m, &eps)? {
            result = Some(d);
            break;
        }
        eps /= BigInt::from(2);
    }
    let d = result
        .ok_or_else(|| Error::Certification("glued family: halving budget exhausted".into()))?;
    if d.edge_count() != 3 * (n - 1) / 2 {
        return Err(Error::Certification(format!(
            "glued family has {} edges, expected {}",
            d.edge_count(),
            3 * (n - 1) / 2
        )));
    }
    Ok(d)
}

/// Even cycle with a degree-2 hat over every other edge: cycle vertices
/// 0..2k, hat vertex `2k + i` joined to `2i - 1 (mod 2k)` and `2i + 2
/// (mod 2k)` — a singly subdivided chord spanning three cycle steps.
/// Non-planar exactly when k is odd.
pub fn hk_graph(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Precondition("hatted cycle needs k >= 2".into()));
    }
    let n = 2 * k;
    let mut edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..k {
        let hat = n + i;
        edges.push((hat, (2 * i + n - 1) % n));
        edges.push((hat, (2 * i + 2) % n));
    }
    Graph::new(3 * k, edges)
}

/// Draws the hatted cycle with strictly convex vertices and midpoints. Each
/// hat midpoint is placed at the center of the segment where the vertical
/// line halfway between the chord end and the edge midpoint crosses the
/// corner triangle; the hat vertex is derived from that midpoint.
pub fn hk_drawing(k: usize, params: &ConstructionParams) -> Result<Drawing<Scalar>> {
    params.check()?;
    if k < 2 {
        return Err(Error::Precondition("hatted cycle needs k >= 2".into()));
    }
    let n = 2 * k;
    let mut bound = params.circle_denominator_bound;
    'retry: for _ in 0..params.retry_budget {
        let base: Vec<Point<Scalar>> = circle_points(n, bound)
            .into_iter()
            .map(|(x, y)| pt_rat(x, y))
            .collect();
        bound = bound.saturating_mul(10);
        let mut pts = base.clone();
        for i in 0..k {
            let x = &base[2 * i];
            let y = &base[(2 * i + 1) % n];
            let xp = &base[(2 * i + n - 1) % n];
            let m_e = x.midpoint(y);
            let m_prev = xp.midpoint(x);
            let (dx, dy) = y.sub(x);
            let f = |p: &Point<Scalar>| dx.clone() * p.x.clone() + dy.clone() * p.y.clone();
            let level = (f(&m_e) + f(xp)) / Scalar::from_int(2);
            let tri = [m_prev, x.clone(), m_e];
            let mut hits: Vec<Point<Scalar>> = Vec::new();
            for a in 0..3 {
                let p = &tri[a];
                let q = &tri[(a + 1) % 3];
                let fp = f(p) - level.clone();
                let fq = f(q) - level.clone();
                if fp.is_zero() {
                    if !hits.contains(p) {
                        hits.push(p.clone());
                    }
                } else if fp.is_positive() != fq.is_positive() && !fq.is_zero() {
                    let t = fp.clone() / (fp - fq);
                    let (ex, ey) = q.sub(p);
                    let hit = p.add_vec(&(t.clone() * ex, t * ey));
                    if !hits.contains(&hit) {
                        hits.push(hit);
                    }
                }
            }
            if hits.len() != 2 {
                continue 'retry; // feasible segment degenerate, refine polygon
            }
            let mu = hits[0].midpoint(&hits[1]);
            let hat = Point::new(
                Scalar::from_int(2) * mu.x - xp.x.clone(),
                Scalar::from_int(2) * mu.y - xp.y.clone(),
            );
            pts.push(hat);
        }
        let d = Drawing::new(hk_graph(k)?, pts)?;
        if d.validate().is_ok() {
            if let Ok(report) = d.classify() {
                if report.levels() == (Convexity::Strict, Convexity::Strict) {
                    return Ok(d);
                }
            }
        }
    }
    Err(Error::Certification(
        "hatted cycle: no feasible polygon in budget".into(),
    ))
}

/// A complete-bipartite 3 x 3 subdivision inside the k = 3 hatted cycle:
/// branch parts are the odd and even hexagon vertices, joined by the six
/// cycle edges and three two-edge paths through the hats.
pub fn hk3_bipartite_subdivision() -> (Vec<VertexId>, Vec<VertexId>, Vec<Vec<VertexId>>) {
    let left = vec![1, 3, 5];
    let right = vec![0, 2, 4];
    let paths = vec![
        vec![1, 0],
        vec![1, 2],
        vec![3, 2],
        vec![3, 4],
        vec![5, 4],
        vec![5, 0],
        vec![5, 6, 2],
        vec![1, 7, 4],
        vec![3, 8, 0],
    ];
    (left, right, paths)
}

/// Checks that the given paths realize a complete-bipartite 3 x 3
/// subdivision in `g`: branch parts of size three, one path per pair, all
/// edges present, and internal vertices used at most once and disjoint from
/// the branch vertices.
pub fn verify_bipartite_subdivision(
    g: &Graph,
    left: &[VertexId],
    right: &[VertexId],
    paths: &[Vec<VertexId>],
) -> bool {
    use std::collections::BTreeSet;
    let left: BTreeSet<_> = left.iter().copied().collect();
    let right: BTreeSet<_> = right.iter().copied().collect();
    if left.len() != 3 || right.len() != 3 || !left.is_disjoint(&right) || paths.len() != 9 {
        return false;
    }
    let mut pairs = BTreeSet::new();
    let mut internals = BTreeSet::new();
    for path in paths {
        if path.len() < 2 {
            return false;
        }
        for win in path.windows(2) {
            if !g.has_edge(win[0], win[1]) {
                return false;
            }
        }
        let (a, b) = (path[0], *path.last().unwrap());
        let pair = if left.contains(&a) && right.contains(&b) {
            (a, b)
        } else if right.contains(&a) && left.contains(&b) {
            (b, a)
        } else {
            return false;
        };
        if !pairs.insert(pair) {
            return false;
        }
        for &v in &path[1..path.len() - 1] {
            if left.contains(&v) || right.contains(&v) || !internals.insert(v) {
                return false;
            }
        }
    }
    pairs.len() == 9
}

/// Prism over a k-cycle laid out on a 2k-gon: inner edges skip one vertex,
/// outer edges join even-indexed consecutive pairs.
pub fn pk_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition("prism needs k >= 3".into()));
    }
    let n = 2 * k;
    let mut edges: Vec<Edge> = (0..n).map(|i| (i, (i + 2) % n)).collect();
    for i in (0..n).step_by(2) {
        edges.push((i, i + 1));
    }
    Graph::new(n, edges)
}

fn regular_polygon_exact(k: usize) -> Result<Vec<Point<Scalar>>> {
    let half = Scalar::ratio(1, 2);
    let pts: Vec<(Scalar, Scalar)> = match k {
        // affine image of the regular hexagon with rational coordinates
        3 => {
            let one = Scalar::from_int(1);
            vec![
                (one.clone(), Scalar::from_int(0)),
                (half.clone(), half.clone()),
                (-half.clone(), half.clone()),
                (-one.clone(), Scalar::from_int(0)),
                (-half.clone(), -half.clone()),
                (half.clone(), -half.clone()),
            ]
        }
        4 => {
            let s = Scalar::quad(Rational::zero(), rat(1, 2), 2)?;
            let one = Scalar::from_int(1);
            let zero = Scalar::from_int(0);
            vec![
                (one.clone(), zero.clone()),
                (s.clone(), s.clone()),
                (zero.clone(), one.clone()),
                (-s.clone(), s.clone()),
                (-one.clone(), zero.clone()),
                (-s.clone(), -s.clone()),
                (zero, -one),
                (s.clone(), -s),
            ]
        }
        6 => {
            let h = Scalar::quad(Rational::zero(), rat(1, 2), 3)?;
            let one = Scalar::from_int(1);
            let zero = Scalar::from_int(0);
            vec![
                (one.clone(), zero.clone()),
                (h.clone(), half.clone()),
                (half.clone(), h.clone()),
                (zero.clone(), one.clone()),
                (-half.clone(), h.clone()),
                (-h.clone(), half.clone()),
                (-one.clone(), zero.clone()),
                (-h.clone(), -half.clone()),
                (-half.clone(), -h.clone()),
                (zero, -one),
                (half.clone(), -h.clone()),
                (h, -half),
            ]
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "exact prism drawing needs k in {{3, 4, 6}}, got {k}"
            )))
        }
    };
    Ok(pts.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

/// Exact prism drawing with strictly convex vertices and weakly (not
/// strictly) convex midpoints. Exact coordinates exist for k = 3 (rational),
/// k = 4 (field sqrt2) and k = 6 (field sqrt3); other k are served only by
/// [`pk_drawing_float`].
pub fn pk_drawing(k: usize) -> Result<Drawing<Scalar>> {
    let pts = regular_polygon_exact(k)?;
    let d = Drawing::new(pk_graph(k)?, pts)?;
    certify(&d, Convexity::Strict, Convexity::WeakNotStrict, "prism")?;
    let report = d.classify()?;
    if report.midpoint_level() != Convexity::WeakNotStrict {
        return Err(Error::Certification(
            "prism midpoints unexpectedly strict".into(),
        ));
    }
    Ok(d)
}

/// Tolerance report for the float-mode prism drawing.
#[derive(Clone, Debug)]
pub struct FloatPrismReport {
    /// Largest distance from any midpoint to the boundary of the outer-edge
    /// midpoint polygon.
    pub max_midpoint_boundary_distance: f64,
    /// Smallest margin by which a vertex clears the hull of the others.
    pub vertex_margin: f64,
}

/// Prism drawing for arbitrary k on the float regular polygon, with
/// coordinates snapped to exact dyadic rationals. The exact classifier would
/// call these midpoints non-convex; the report quantifies how close they are
/// to the weakly convex ideal instead.
pub fn pk_drawing_float(k: usize) -> Result<(Drawing<Scalar>, FloatPrismReport)> {
    if k < 3 {
        return Err(Error::Precondition("prism needs k >= 3".into()));
    }
    let n = 2 * k;
    let float_pts: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            let a = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
            (a.cos(), a.sin())
        })
        .collect();
    // outer-edge midpoints form the reference polygon
    let outer: Vec<(f64, f64)> = (0..n)
        .step_by(2)
        .map(|i| {
            let (x0, y0) = float_pts[i];
            let (x1, y1) = float_pts[i + 1];
            ((x0 + x1) / 2.0, (y0 + y1) / 2.0)
        })
        .collect();
    let graph = pk_graph(k)?;
    let dist_to_polygon = |p: (f64, f64)| -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..outer.len() {
            let a = outer[i];
            let b = outer[(i + 1) % outer.len()];
            let (ex, ey) = (b.0 - a.0, b.1 - a.1);
            let len2 = ex * ex + ey * ey;
            let t = (((p.0 - a.0) * ex + (p.1 - a.1) * ey) / len2).clamp(0.0, 1.0);
            let (cx, cy) = (a.0 + t * ex, a.1 + t * ey);
            best = best.min(((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt());
        }
        best
    };
    let mut max_dist: f64 = 0.0;
    for &(u, v) in graph.edges() {
        let m = (
            (float_pts[u].0 + float_pts[v].0) / 2.0,
            (float_pts[u].1 + float_pts[v].1) / 2.0,
        );
        max_dist = max_dist.max(dist_to_polygon(m));
    }
    // vertex margin: regular polygon corners clear the chord of their
    // neighbors by R (1 - cos(pi/n))
    let vertex_margin = 1.0 - (std::f64::consts::PI / n as f64).cos();
    let pts = float_pts
        .into_iter()
        .map(|(x, y)| {
            Ok(Point::new(
                Scalar::from_f64_exact(x)?,
                Scalar::from_f64_exact(y)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Drawing::new(graph, pts)?;
    d.validate().map_err(Error::InvalidDrawing)?;
    Ok((
        d,
        FloatPrismReport {
            max_midpoint_boundary_distance: max_dist,
            vertex_margin,
        },
    ))
}
