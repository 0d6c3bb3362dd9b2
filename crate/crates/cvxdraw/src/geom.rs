//! Planar points and the exact convexity predicates everything else builds on.
//!
//! All functions here are generic over the scalar and decide signs exactly via
//! `partial_cmp` against zero, so they stay correct for [`crate::Scalar`],
//! `BigInt` (ring operations only) and `f64` alike. Only
//! [`segment_meets_open_region`] and `Point::midpoint` divide, and both keep
//! working over rings by tracking parameters as fractions (`midpoint` is the
//! exception: it needs a field scalar).

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use crate::{Error, Result};

/// Scalars the geometry kernel accepts: exact comparisons plus ring/field ops.
pub trait GeomScalar: Clone + PartialOrd + fmt::Debug + Signed {}
impl<T: Clone + PartialOrd + fmt::Debug + Signed> GeomScalar for T {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<T: fmt::Debug> fmt::Debug for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl<T: GeomScalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Self) -> (T, T) {
        (self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn add_vec(&self, v: &(T, T)) -> Self {
        Point::new(self.x.clone() + v.0.clone(), self.y.clone() + v.1.clone())
    }

    /// Exact midpoint. Requires a field scalar (divides by two).
    pub fn midpoint(&self, o: &Self) -> Self {
        let two = T::one() + T::one();
        Point::new(
            (self.x.clone() + o.x.clone()) / two.clone(),
            (self.y.clone() + o.y.clone()) / two,
        )
    }

    /// Lexicographic order (x, then y). Panics on incomparable coordinates.
    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        match self.x.partial_cmp(&o.x) {
            Some(Ordering::Equal) => self.y.partial_cmp(&o.y).expect("incomparable coordinates"),
            Some(ord) => ord,
            None => panic!("incomparable coordinates"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

pub(crate) fn sign_of<T: GeomScalar>(v: &T) -> Ordering {
    v.partial_cmp(&T::zero()).expect("incomparable value")
}

/// Signed cross product `(q - p) x (r - p)`; positive for a left turn.
pub fn cross_value<T: GeomScalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> T {
    let (ax, ay) = q.sub(p);
    let (bx, by) = r.sub(p);
    ax * by - ay * bx
}

/// Exact orientation of the triple `(p, q, r)`.
pub fn orient<T: GeomScalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Orientation {
    match sign_of(&cross_value(p, q, r)) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

fn sorted_distinct<T: GeomScalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts: Vec<Point<T>> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    pts
}

/// Convex hull corners in counterclockwise order, starting at the
/// lexicographic minimum. Collinear boundary points are dropped: the output
/// contains corners only. Duplicates in the input are permitted.
pub fn convex_hull<T: GeomScalar>(points: &[Point<T>]) -> Result<Vec<Point<T>>> {
    let pts = sorted_distinct(points);
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if pts.len() <= 2 {
        return Ok(pts);
    }
    let chain = |iter: &mut dyn Iterator<Item = &Point<T>>| {
        let mut out: Vec<Point<T>> = Vec::new();
        for p in iter {
            while out.len() >= 2
                && orient(&out[out.len() - 2], &out[out.len() - 1], p)
                    != Orientation::CounterClockwise
            {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    };
    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    Ok(lower)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Outside,
    Boundary,
    Interior,
}

/// Checks that `hull` is a strictly convex simple polygon in ccw order
/// (a single point and a two-point segment are accepted as degenerate hulls).
pub fn validate_hull<T: GeomScalar>(hull: &[Point<T>]) -> Result<()> {
    match hull.len() {
        0 => Err(Error::EmptyPointSet),
        1 => Ok(()),
        2 => {
            if hull[0] == hull[1] {
                Err(Error::BadHull("repeated hull point"))
            } else {
                Ok(())
            }
        }
        h => {
            let mut local_minima = 0usize;
            for i in 0..h {
                let a = &hull[i];
                let b = &hull[(i + 1) % h];
                let c = &hull[(i + 2) % h];
                if orient(a, b, c) != Orientation::CounterClockwise {
                    return Err(Error::BadHull("hull corners must turn strictly left"));
                }
                if b.lex_cmp(a) == Ordering::Less && b.lex_cmp(c) == Ordering::Less {
                    local_minima += 1;
                }
            }
            // All-left-turn cycles that wind more than once pass the leftmost
            // region once per winding; a simple convex cycle has exactly one
            // local lexicographic minimum.
            if local_minima != 1 {
                return Err(Error::BadHull("hull winds more than once"));
            }
            Ok(())
        }
    }
}

fn on_segment<T: GeomScalar>(p: &Point<T>, a: &Point<T>, b: &Point<T>) -> bool {
    if orient(a, b, p) != Orientation::Collinear {
        return false;
    }
    let (dx, dy) = b.sub(a);
    let (px, py) = p.sub(a);
    let t = px * dx.clone() + py * dy.clone();
    let len2 = dx.clone() * dx + dy.clone() * dy;
    sign_of(&t) != Ordering::Less && t <= len2
}

pub(crate) fn locate_unchecked<T: GeomScalar>(p: &Point<T>, hull: &[Point<T>]) -> Location {
    match hull.len() {
        0 => Location::Outside,
        1 => {
            if *p == hull[0] {
                Location::Boundary
            } else {
                Location::Outside
            }
        }
        2 => {
            if on_segment(p, &hull[0], &hull[1]) {
                Location::Boundary
            } else {
                Location::Outside
            }
        }
        h => {
            let mut boundary = false;
            for i in 0..h {
                match orient(&hull[i], &hull[(i + 1) % h], p) {
                    Orientation::Clockwise => return Location::Outside,
                    Orientation::Collinear => boundary = true,
                    Orientation::CounterClockwise => {}
                }
            }
            if boundary {
                Location::Boundary
            } else {
                Location::Interior
            }
        }
    }
}

/// Exact location of `p` relative to a ccw convex polygon (corners only).
pub fn point_vs_hull<T: GeomScalar>(p: &Point<T>, hull: &[Point<T>]) -> Result<Location> {
    validate_hull(hull)?;
    Ok(locate_unchecked(p, hull))
}

/// Does the closed segment `ab` intersect the open interior of the polygon?
/// Degenerate hulls (point, segment) have empty interior, so the answer is
/// `false` for them. Works over rings: parameters are kept as fractions.
pub fn segment_meets_open_region<T: GeomScalar>(
    a: &Point<T>,
    b: &Point<T>,
    hull: &[Point<T>],
) -> Result<bool> {
    validate_hull(hull)?;
    Ok(segment_meets_open_unchecked(a, b, hull))
}

pub(crate) fn segment_meets_open_unchecked<T: GeomScalar>(
    a: &Point<T>,
    b: &Point<T>,
    hull: &[Point<T>],
) -> bool {
    let h = hull.len();
    if h <= 2 {
        return false;
    }
    // Edge functionals L_i(t) = va_i + t (vb_i - va_i); the closed polygon is
    // where all are >= 0. Clip [0,1] keeping the parameter interval exact.
    let mut vals: Vec<(T, T)> = Vec::with_capacity(h);
    for i in 0..h {
        let c0 = &hull[i];
        let c1 = &hull[(i + 1) % h];
        vals.push((cross_value(c0, c1, a), cross_value(c0, c1, b)));
    }
    // Fractions with positive denominators.
    let mut lo = (T::zero(), T::one());
    let mut hi = (T::one(), T::one());
    let frac_lt = |x: &(T, T), y: &(T, T)| {
        sign_of(&(x.0.clone() * y.1.clone() - y.0.clone() * x.1.clone())) == Ordering::Less
    };
    for (va, vb) in &vals {
        let sa = sign_of(va);
        let sb = sign_of(vb);
        if sa == Ordering::Less && sb == Ordering::Less {
            return false;
        }
        if sa == Ordering::Less {
            // entering at t = -va / (vb - va)
            let cand = (-(va.clone()), vb.clone() - va.clone());
            if frac_lt(&lo, &cand) {
                lo = cand;
            }
        } else if sb == Ordering::Less {
            // leaving at t = va / (va - vb)
            let cand = (va.clone(), va.clone() - vb.clone());
            if frac_lt(&cand, &hi) {
                hi = cand;
            }
        }
    }
    if !frac_lt(&lo, &hi) {
        // Empty or a single contact parameter; either way no open-interior hit.
        return false;
    }
    // Evaluate every functional at the interval midpoint
    // t = (lo + hi) / 2 = N / D with D > 0. If any vanishes there, that
    // functional is identically zero on the interval and the clipped segment
    // runs along the boundary.
    let n = lo.0.clone() * hi.1.clone() + hi.0.clone() * lo.1.clone();
    let d = (T::one() + T::one()) * lo.1 * hi.1;
    vals.into_iter().all(|(va, vb)| {
        let f = va.clone() * d.clone() + n.clone() * (vb - va);
        sign_of(&f) == Ordering::Greater
    })
}

/// Three-way convexity classification of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Convexity {
    NonConvex,
    WeakNotStrict,
    Strict,
}

impl fmt::Display for Convexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Convexity::NonConvex => "non-convex",
            Convexity::WeakNotStrict => "weak",
            Convexity::Strict => "strict",
        };
        f.write_str(s)
    }
}

/// Classification of a point set, with a witness for non-strict outcomes:
/// a boundary point that is not a corner, or an interior point.
#[derive(Clone, Debug, PartialEq)]
pub enum ConvexityStatus<T> {
    Strict,
    WeakNotStrict { witness: Point<T> },
    NonConvex { witness: Point<T> },
}

impl<T> ConvexityStatus<T> {
    pub fn level(&self) -> Convexity {
        match self {
            ConvexityStatus::Strict => Convexity::Strict,
            ConvexityStatus::WeakNotStrict { .. } => Convexity::WeakNotStrict,
            ConvexityStatus::NonConvex { .. } => Convexity::NonConvex,
        }
    }

    pub fn witness(&self) -> Option<&Point<T>> {
        match self {
            ConvexityStatus::Strict => None,
            ConvexityStatus::WeakNotStrict { witness } | ConvexityStatus::NonConvex { witness } => {
                Some(witness)
            }
        }
    }
}

/// Classifies a point sequence: `Strict` when every distinct point is a hull
/// corner, `WeakNotStrict` when all points lie on the hull boundary but some
/// is not a corner, `NonConvex` otherwise. A repeated point on the boundary
/// downgrades `Strict` to `WeakNotStrict`; sets of at most two distinct
/// points are strict. The empty set is vacuously strict.
pub fn convexity_status<T: GeomScalar>(points: &[Point<T>]) -> ConvexityStatus<T> {
    if points.is_empty() {
        return ConvexityStatus::Strict;
    }
    let distinct = sorted_distinct(points);
    let dup_witness = if distinct.len() < points.len() {
        let mut seen: Vec<&Point<T>> = Vec::new();
        let mut w = None;
        for p in points {
            if seen.contains(&p) {
                w = Some(p.clone());
                break;
            }
            seen.push(p);
        }
        w
    } else {
        None
    };
    if distinct.len() <= 2 {
        return match dup_witness {
            Some(witness) => ConvexityStatus::WeakNotStrict { witness },
            None => ConvexityStatus::Strict,
        };
    }
    let hull = convex_hull(&distinct).expect("nonempty");
    let mut weak_witness: Option<Point<T>> = dup_witness;
    for p in points {
        if hull.contains(p) {
            continue;
        }
        match locate_unchecked(p, &hull) {
            Location::Interior => return ConvexityStatus::NonConvex { witness: p.clone() },
            Location::Boundary => {
                if weak_witness.is_none() {
                    weak_witness = Some(p.clone());
                }
            }
            Location::Outside => unreachable!("input point outside its own hull"),
        }
    }
    match weak_witness {
        Some(witness) => ConvexityStatus::WeakNotStrict { witness },
        None => ConvexityStatus::Strict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn p(x: i64, y: i64) -> Point<Scalar> {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    fn pr(x: (i64, i64), y: (i64, i64)) -> Point<Scalar> {
        Point::new(Scalar::ratio(x.0, x.1), Scalar::ratio(y.0, y.1))
    }

    #[test]
    fn orient_examples() {
        assert_eq!(
            orient(&p(0, 0), &p(1, 0), &p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orient_antisymmetry() {
        let (a, b, c) = (p(2, -1), p(5, 3), p(-1, 4));
        let s = orient(&a, &b, &c).sign();
        assert_eq!(orient(&b, &a, &c).sign(), -s);
        assert_eq!(orient(&a, &c, &b).sign(), -s);
        assert_eq!(orient(&c, &b, &a).sign(), -s);
    }

    #[test]
    fn hull_square_with_center() {
        let pts = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1), pr((1, 2), (1, 2))];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull, vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]);
    }

    #[test]
    fn hull_collinear() {
        let hull = convex_hull(&[p(0, 0), p(1, 0), p(2, 0)]).unwrap();
        assert_eq!(hull, vec![p(0, 0), p(2, 0)]);
    }

    #[test]
    fn hull_minkowski_triangle_sum() {
        let pts = vec![p(0, 0), p(4, 0), p(0, 4), p(2, 0), p(0, 2), p(2, 2)];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull, vec![p(0, 0), p(4, 0), p(0, 4)]);
    }

    #[test]
    fn hull_rejects_empty() {
        assert!(convex_hull::<Scalar>(&[]).is_err());
    }

    #[test]
    fn point_location() {
        let square = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(
            point_vs_hull(&pr((1, 2), (0, 1)), &square).unwrap(),
            Location::Boundary
        );
        assert_eq!(point_vs_hull(&p(2, 2), &square).unwrap(), Location::Outside);
        assert_eq!(
            point_vs_hull(&pr((1, 2), (1, 2)), &square).unwrap(),
            Location::Interior
        );
    }

    #[test]
    fn hull_validation_rejects_clockwise_and_winding() {
        let cw = vec![p(0, 0), p(0, 1), p(1, 0)];
        assert!(validate_hull(&cw).is_err());
        let ok = vec![p(0, 0), p(1, 0), p(0, 1)];
        assert!(validate_hull(&ok).is_ok());
    }

    #[test]
    fn status_examples() {
        let square = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(convexity_status(&square), ConvexityStatus::Strict);

        let mut with_mid = square.to_vec();
        with_mid.push(pr((1, 2), (0, 1)));
        assert!(matches!(
            convexity_status(&with_mid),
            ConvexityStatus::WeakNotStrict { .. }
        ));

        let mut with_center = square.to_vec();
        let center = pr((1, 2), (1, 2));
        with_center.push(center.clone());
        assert_eq!(
            convexity_status(&with_center),
            ConvexityStatus::NonConvex { witness: center }
        );
    }

    #[test]
    fn status_duplicate_policy() {
        // Repeated corner: weak, not strict. Interior duplicate: non-convex.
        let dup_corner = [p(0, 0), p(1, 0), p(0, 1), p(0, 0)];
        assert!(matches!(
            convexity_status(&dup_corner),
            ConvexityStatus::WeakNotStrict { .. }
        ));
        let two = [p(0, 0), p(1, 1)];
        assert_eq!(convexity_status(&two), ConvexityStatus::Strict);
    }

    #[test]
    fn segment_vs_diamond() {
        let diamond = vec![
            pr((1, 2), (0, 1)),
            pr((1, 1), (1, 2)),
            pr((1, 2), (1, 1)),
            pr((0, 1), (1, 2)),
        ];
        // touches only the corner
        assert!(!segment_meets_open_region(&p(0, 0), &pr((1, 2), (0, 1)), &diamond).unwrap());
        // passes through the center
        assert!(segment_meets_open_region(&p(0, 0), &p(1, 1), &diamond).unwrap());
        // single-point hull has empty interior
        assert!(!segment_meets_open_region(&p(0, 0), &p(1, 1), &[p(5, 5)]).unwrap());
        // sliding along an edge never enters the interior
        assert!(
            !segment_meets_open_region(&pr((1, 2), (0, 1)), &pr((1, 1), (1, 2)), &diamond).unwrap()
        );
    }
}
