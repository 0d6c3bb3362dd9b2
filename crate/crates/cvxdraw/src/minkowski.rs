//! Minkowski sums of rational planar point sets and largest strictly or
//! weakly convex subsets.
//!
//! The subset search clears denominators once and runs an exact
//! longest-convex-polygon dynamic program over integer coordinates (native
//! `i128` when they fit, big integers otherwise). Weak mode reduces to the
//! strict program by weighting each candidate polygon edge with the number of
//! input points lying strictly inside it; purely collinear subsets are
//! handled separately since they form no polygon.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::geom::{convexity_status, cross_value, orient, GeomScalar, Orientation, Point};
use crate::ops::ConvexityMode;
use crate::scalar::Rational;
use crate::{Error, Result, Scalar};

/// Deduplicated set of rational points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Point<Scalar>>,
}

impl PointSet {
    /// Builds a set, dropping exact duplicates (first occurrence wins).
    /// Quadratic-extension coordinates are rejected: sums and subset search
    /// are defined over the rationals.
    pub fn new(points: impl IntoIterator<Item = Point<Scalar>>) -> Result<Self> {
        let mut out: Vec<Point<Scalar>> = Vec::new();
        for p in points {
            if !p.x.is_rational() || !p.y.is_rational() {
                return Err(Error::Unsupported(
                    "point sets must have rational coordinates".into(),
                ));
            }
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(PointSet { points: out })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<Scalar>] {
        &self.points
    }
}

/// Minkowski sum with set semantics: coinciding sums collapse.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> PointSet {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for p in a.points() {
        for q in b.points() {
            sums.push(Point::new(
                p.x.clone() + q.x.clone(),
                p.y.clone() + q.y.clone(),
            ));
        }
    }
    PointSet::new(sums).expect("sums of rationals are rational")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetMethod {
    Dp,
    BruteForce,
}

/// A maximum convex subset: its size, the witness points (sorted), and which
/// algorithm produced it.
#[derive(Clone, Debug)]
pub struct ConvexSubsetResult {
    pub mode: ConvexityMode,
    pub size: usize,
    pub witness: Vec<Point<Scalar>>,
    pub method: SubsetMethod,
}

/// Integer-scaled copies of the input points.
enum Scaled {
    Small(Vec<Point<i128>>),
    Big(Vec<Point<BigInt>>),
}

fn scale_to_integers(points: &[Point<Scalar>]) -> Scaled {
    let rat = |s: &Scalar| -> Rational { s.as_rational().expect("rational").clone() };
    let mut lcm = BigInt::one();
    for p in points {
        lcm = lcm.lcm(rat(&p.x).denom());
        lcm = lcm.lcm(rat(&p.y).denom());
    }
    let scaled: Vec<Point<BigInt>> = points
        .iter()
        .map(|p| {
            let sx = rat(&p.x);
            let sy = rat(&p.y);
            Point::new(
                sx.numer() * (&lcm / sx.denom()),
                sy.numer() * (&lcm / sy.denom()),
            )
        })
        .collect();
    let limit = BigInt::from(1i128 << 60);
    if scaled
        .iter()
        .all(|p| p.x.abs() < limit && p.y.abs() < limit)
    {
        Scaled::Small(
            scaled
                .iter()
                .map(|p| Point::new(p.x.to_i128().unwrap(), p.y.to_i128().unwrap()))
                .collect(),
        )
    } else {
        Scaled::Big(scaled)
    }
}

fn strictly_between<T: GeomScalar>(p: &Point<T>, a: &Point<T>, b: &Point<T>) -> bool {
    if orient(a, b, p) != Orientation::Collinear {
        return false;
    }
    let (dx, dy) = b.sub(a);
    let (px, py) = p.sub(a);
    let t = px * dx.clone() + py * dy.clone();
    let len2 = dx.clone() * dx + dy.clone() * dy;
    t > T::zero() && t < len2
}

/// Largest set of collinear points, as indices (the whole line is weakly
/// convex). Returns at most-2-point sets when nothing bigger exists.
fn best_collinear<T: GeomScalar>(pts: &[Point<T>]) -> Vec<usize> {
    let n = pts.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut best: Vec<usize> = vec![0, 1];
    for i in 0..n {
        for j in i + 1..n {
            let mut line: Vec<usize> = vec![i, j];
            for k in 0..n {
                if k != i && k != j && orient(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    line.push(k);
                }
            }
            if line.len() > best.len() {
                best = line;
            }
        }
    }
    best
}

/// Longest convex polygon through the points, scored as corner count plus
/// `edge_weight` over its edges. `edge_weight[i][j]` must be symmetric.
/// Returns the best score with the corner indices, or `None` when no
/// non-degenerate polygon (3 or more corners) exists.
fn best_polygon<T: GeomScalar>(
    pts: &[Point<T>],
    edge_weight: Option<&Vec<Vec<u32>>>,
) -> Option<(usize, Vec<usize>)> {
    let n = pts.len();
    let w = |i: usize, j: usize| -> usize { edge_weight.map(|m| m[i][j] as usize).unwrap_or(0) };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pts[a].lex_cmp(&pts[b]));
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (rank, &a) in order.iter().enumerate() {
        // candidates strictly lex-greater than the anchor, by angle around it
        let mut cand: Vec<usize> = order[rank + 1..].to_vec();
        if cand.len() < 2 {
            continue;
        }
        let dir = |i: usize| pts[i].sub(&pts[a]);
        cand.sort_by(|&i, &j| {
            let di = dir(i);
            let dj = dir(j);
            let c = di.0.clone() * dj.1.clone() - di.1.clone() * dj.0.clone();
            match c.partial_cmp(&T::zero()).expect("comparable") {
                std::cmp::Ordering::Greater => std::cmp::Ordering::Less,
                std::cmp::Ordering::Less => std::cmp::Ordering::Greater,
                std::cmp::Ordering::Equal => {
                    let li = di.0.clone() * di.0 + di.1.clone() * di.1;
                    let lj = dj.0.clone() * dj.0 + dj.1.clone() * dj.1;
                    li.partial_cmp(&lj).expect("comparable")
                }
            }
        });
        let k = cand.len();
        let angle_lt = |i: usize, j: usize| -> bool {
            // strictly smaller angle around the anchor
            cross_value(&pts[a], &pts[cand[i]], &pts[cand[j]]) > T::zero()
        };
        // dp[i][j]: best score of a chain anchor -> ... -> cand[i] -> cand[j];
        // usize::MAX marks unreachable. parent[i][j] reconstructs the chain.
        const UNSET: usize = usize::MAX;
        let mut dp = vec![vec![UNSET; k]; k];
        let mut parent = vec![vec![UNSET; k]; k];
        let close = |score: usize,
                     chain: (usize, usize),
                     parent_ref: &Vec<Vec<usize>>,
                     best: &mut Option<(usize, Vec<usize>)>| {
            // polygon value: chain score + weight of the closing edge
            let (i, j) = chain;
            let total = score + w(cand[j], a);
            if best.as_ref().map(|(s, _)| total > *s).unwrap_or(true) {
                // rebuild corner list
                let mut frame = vec![cand[j], cand[i]];
                let (mut ci, mut cj) = (i, j);
                while parent_ref[ci][cj] != UNSET {
                    let h = parent_ref[ci][cj];
                    frame.push(cand[h]);
                    cj = ci;
                    ci = h;
                }
                frame.push(a);
                frame.reverse();
                *best = Some((total, frame));
            }
        };
        for j in 0..k {
            // finalize states (i, j), then try closing and extensions
            for i in 0..j {
                if dp[i][j] == UNSET {
                    continue;
                }
                let score = dp[i][j];
                // close: turn at cand[j] must be strictly left toward anchor
                if orient(&pts[cand[i]], &pts[cand[j]], &pts[a]) == Orientation::CounterClockwise {
                    close(score, (i, j), &parent, &mut best);
                }
                for l in j + 1..k {
                    if !angle_lt(j, l) {
                        continue;
                    }
                    if orient(&pts[cand[i]], &pts[cand[j]], &pts[cand[l]])
                        == Orientation::CounterClockwise
                    {
                        let v = score + 1 + w(cand[j], cand[l]);
                        if v > dp[j][l] || dp[j][l] == UNSET {
                            dp[j][l] = v;
                            parent[j][l] = i;
                        }
                    }
                }
            }
            // base chains anchor -> cand[j] -> cand[l]
            for l in j + 1..k {
                if !angle_lt(j, l) {
                    continue;
                }
                if orient(&pts[a], &pts[cand[j]], &pts[cand[l]]) == Orientation::CounterClockwise {
                    let v = 2 + w(a, cand[j]) + 1 + w(cand[j], cand[l]);
                    if dp[j][l] == UNSET || v > dp[j][l] {
                        dp[j][l] = v;
                        parent[j][l] = UNSET;
                    }
                }
            }
        }
    }
    best
}

fn subset_result(
    ps: &PointSet,
    mode: ConvexityMode,
    method: SubsetMethod,
    indices: Vec<usize>,
) -> ConvexSubsetResult {
    let mut witness: Vec<Point<Scalar>> = indices.iter().map(|&i| ps.points[i].clone()).collect();
    witness.sort_by(|a, b| a.lex_cmp(b));
    ConvexSubsetResult {
        mode,
        size: witness.len(),
        witness,
        method,
    }
}

fn largest_via_dp<T: GeomScalar>(pts: &[Point<T>], mode: ConvexityMode) -> (usize, Vec<usize>) {
    let n = pts.len();
    // baseline: any one or two points are strict; a full line is weak
    let mut best: Vec<usize> = (0..n.min(2)).collect();
    if mode == ConvexityMode::Weak {
        let line = best_collinear(pts);
        if line.len() > best.len() {
            best = line;
        }
    }
    let weights = if mode == ConvexityMode::Weak {
        let mut m = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = (0..n)
                    .filter(|&k| k != i && k != j && strictly_between(&pts[k], &pts[i], &pts[j]))
                    .count() as u32;
                m[i][j] = c;
                m[j][i] = c;
            }
        }
        Some(m)
    } else {
        None
    };
    if let Some((score, frame)) = best_polygon(pts, weights.as_ref()) {
        if score > best.len() {
            // expand the frame with the points on its edges (weak mode)
            let mut full = frame.clone();
            if mode == ConvexityMode::Weak {
                let h = frame.len();
                for e in 0..h {
                    let (p, q) = (frame[e], frame[(e + 1) % h]);
                    for r in 0..n {
                        if strictly_between(&pts[r], &pts[p], &pts[q]) {
                            full.push(r);
                        }
                    }
                }
            }
            debug_assert_eq!(full.len(), score);
            best = full;
        }
    }
    (best.len(), best)
}

const BRUTE_FORCE_CAP: usize = 20;

/// Exact maximum by dynamic programming over ordered point pairs. The
/// witness is re-checked by the exact classifier before returning.
pub fn largest_convex_subset(ps: &PointSet, mode: ConvexityMode) -> Result<ConvexSubsetResult> {
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let (size, indices) = match scale_to_integers(&ps.points) {
        Scaled::Small(pts) => largest_via_dp(&pts, mode),
        Scaled::Big(pts) => largest_via_dp(&pts, mode),
    };
    let result = subset_result(ps, mode, SubsetMethod::Dp, indices);
    debug_assert_eq!(result.size, size);
    if !mode.met_by(convexity_status(&result.witness).level()) {
        // Guard against a witness that closes into something non-convex; fall
        // back to exhaustive search while the instance is small.
        if ps.len() <= BRUTE_FORCE_CAP {
            return brute_force_largest(ps, mode);
        }
        return Err(Error::Certification(
            "dynamic program produced an uncertifiable witness".into(),
        ));
    }
    Ok(result)
}

/// Independent oracle: exhaustive subset enumeration, largest size first.
pub fn brute_force_largest(ps: &PointSet, mode: ConvexityMode) -> Result<ConvexSubsetResult> {
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if ps.len() > BRUTE_FORCE_CAP {
        return Err(Error::SizeCap {
            size: ps.len(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    let indices = match scale_to_integers(&ps.points) {
        Scaled::Small(pts) => brute_force_indices(&pts, mode),
        Scaled::Big(pts) => brute_force_indices(&pts, mode),
    };
    Ok(subset_result(ps, mode, SubsetMethod::BruteForce, indices))
}

fn is_convex_subset<T: GeomScalar>(
    pts: &[Point<T>],
    subset: &[usize],
    mode: ConvexityMode,
) -> bool {
    // subset indices are sorted by the global lex order, so a monotone chain
    // applies directly
    let sel: Vec<&Point<T>> = subset.iter().map(|&i| &pts[i]).collect();
    let s = sel.len();
    if s <= 2 {
        return true;
    }
    // monotone chain storing positions within `sel`
    let hull_positions = |rev: bool| -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let range: Vec<usize> = if rev {
            (0..s).rev().collect()
        } else {
            (0..s).collect()
        };
        for i in range {
            while out.len() >= 2
                && orient(sel[out[out.len() - 2]], sel[out[out.len() - 1]], sel[i])
                    != Orientation::CounterClockwise
            {
                out.pop();
            }
            out.push(i);
        }
        out
    };
    let mut lower = hull_positions(false);
    let mut upper = hull_positions(true);
    lower.pop();
    upper.pop();
    let corner_count = lower.len() + upper.len();
    match mode {
        ConvexityMode::Strict => corner_count == s,
        ConvexityMode::Weak => {
            if corner_count == s {
                return true;
            }
            if corner_count < 2 {
                return true; // all points equal (impossible: deduplicated)
            }
            lower.append(&mut upper);
            let hull: Vec<usize> = lower;
            if hull.len() == 2 {
                // collinear subset: everything on the segment
                return true;
            }
            'points: for i in 0..s {
                if hull.contains(&i) {
                    continue;
                }
                for e in 0..hull.len() {
                    if strictly_between(sel[i], sel[hull[e]], sel[hull[(e + 1) % hull.len()]]) {
                        continue 'points;
                    }
                }
                return false;
            }
            true
        }
    }
}

fn brute_force_indices<T: GeomScalar>(pts: &[Point<T>], mode: ConvexityMode) -> Vec<usize> {
    let n = pts.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pts[a].lex_cmp(&pts[b]));
    for size in (1..=n).rev() {
        let mut found: Option<Vec<usize>> = None;
        crate::ops::for_each_combination(n, size, |combo| {
            let subset: Vec<usize> = combo.iter().map(|&c| order[c]).collect();
            if is_convex_subset(pts, &subset, mode) {
                found = Some(subset);
                true
            } else {
                false
            }
        });
        if let Some(subset) = found {
            return subset;
        }
    }
    vec![]
}

/// Result of checking the additive-vertex quantities on one instance.
#[derive(Clone, Debug)]
pub struct GtildeReport {
    pub n: usize,
    pub weak_max: usize,
    pub strict_max: usize,
    /// `weak_max <= 2n` and `strict_max <= 2n - 2` (universal upper bounds).
    pub bounds_ok: bool,
    /// Whether this instance attains `weak_max = 2n`.
    pub weak_attains: bool,
    /// Whether `strict_max >= floor(3n/2)`.
    pub strict_attains_lower: bool,
}

/// Computes the largest weakly and strictly convex subsets of `A + A` for a
/// strictly convex `A` and compares them against the proven windows.
pub fn gtilde_experiment(a: &PointSet) -> Result<GtildeReport> {
    if !matches!(
        convexity_status(a.points()).level(),
        crate::geom::Convexity::Strict
    ) {
        return Err(Error::Precondition(
            "instance set must be strictly convex".into(),
        ));
    }
    let n = a.len();
    let sum = minkowski_sum(a, a);
    let weak = largest_convex_subset(&sum, ConvexityMode::Weak)?;
    let strict = largest_convex_subset(&sum, ConvexityMode::Strict)?;
    Ok(GtildeReport {
        n,
        weak_max: weak.size,
        strict_max: strict.size,
        bounds_ok: weak.size <= 2 * n && strict.size <= 2 * n.saturating_sub(1),
        weak_attains: weak.size == 2 * n,
        strict_attains_lower: strict.size >= (3 * n) / 2,
    })
}
