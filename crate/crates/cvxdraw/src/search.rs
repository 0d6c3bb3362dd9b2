//! Randomized drawing finder with exact certification.
//!
//! The optimizer works purely in floats: a penalty measures how far a
//! configuration is from meeting the requested convexity targets, and
//! restarts of a perturb-and-cool loop drive it to zero. A zero-penalty float
//! configuration is then rationalized coordinate-wise (continued fractions
//! under a denominator bound) and handed to the exact pipeline; only exactly
//! certified drawings are reported as found. Failure is evidence, never
//! proof.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{Drawing, DrawingClass};
use crate::geom::{convex_hull, convexity_status, locate_unchecked, Location, Point};
use crate::graph::{Edge, Graph};
use crate::ops::for_each_combination;
use crate::ratapprox::rationalize;
use crate::scalar::Rational;
use crate::{Error, PositionRequirement, Result, Scalar};

/// Optimizer knobs. Outcomes are a pure function of the config (including
/// the seed).
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub restarts: u32,
    pub iterations: u32,
    pub initial_step: f64,
    pub cooling: f64,
    pub denominator_bound: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 16,
            iterations: 4000,
            initial_step: 0.6,
            cooling: 0.9995,
            denominator_bound: 4096,
            seed: 0,
        }
    }
}

impl SearchConfig {
    fn check(&self) -> Result<()> {
        if self.restarts == 0
            || self.iterations == 0
            || self.initial_step <= 0.0
            || !(0.0..1.0).contains(&self.cooling)
            || self.denominator_bound == 0
        {
            return Err(Error::Precondition(
                "search config fields must be positive (cooling in (0,1))".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum SearchStatus {
    Certified(Drawing<Scalar>),
    Failed {
        best_penalty: f64,
        best_positions: Vec<(f64, f64)>,
    },
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub restarts_used: u32,
    /// Best penalty reached in each restart that ran.
    pub penalty_trace: Vec<f64>,
}

impl SearchOutcome {
    pub fn certified(&self) -> Option<&Drawing<Scalar>> {
        match &self.status {
            SearchStatus::Certified(d) => Some(d),
            SearchStatus::Failed { .. } => None,
        }
    }
}

const STRICT_MARGIN: f64 = 1e-4;
const SEPARATION: f64 = 1e-4;

fn fpoint(p: (f64, f64)) -> Point<f64> {
    Point::new(p.0, p.1)
}

fn dist_point_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (ex, ey) = (b.0 - a.0, b.1 - a.1);
    let len2 = ex * ex + ey * ey;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * ex + (p.1 - a.1) * ey) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.0 + t * ex, a.1 + t * ey);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

fn dist_to_hull_boundary(p: (f64, f64), hull: &[Point<f64>]) -> f64 {
    let h = hull.len();
    if h == 1 {
        let q = (hull[0].x, hull[0].y);
        return ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
    }
    let mut best = f64::INFINITY;
    for i in 0..h {
        let a = (hull[i].x, hull[i].y);
        let b = (hull[(i + 1) % h].x, hull[(i + 1) % h].y);
        best = best.min(dist_point_segment(p, a, b));
        if h == 2 {
            break;
        }
    }
    best
}

/// Distance of `p` into the closed hull: positive inside, zero on the
/// boundary or outside. Degenerate hulls have no interior, so always zero.
fn depth_inside(p: (f64, f64), hull: &[Point<f64>]) -> f64 {
    if hull.len() < 3 {
        return 0.0;
    }
    match locate_unchecked(&fpoint(p), hull) {
        Location::Interior => dist_to_hull_boundary(p, hull),
        _ => 0.0,
    }
}

/// How badly `p` fails to stay strictly outside the hull of the other
/// points, with a small positive margin so rationalization has room.
fn strict_violation(p: (f64, f64), others: &[Point<f64>], scale: f64) -> f64 {
    if others.is_empty() {
        return 0.0;
    }
    let hull = convex_hull(others).expect("nonempty");
    let d = dist_to_hull_boundary(p, &hull);
    let inside = hull.len() >= 3
        && matches!(
            locate_unchecked(&fpoint(p), &hull),
            Location::Interior | Location::Boundary
        );
    let on_degenerate = hull.len() < 3 && d == 0.0;
    let signed = if inside || on_degenerate { d } else { -d };
    (signed + STRICT_MARGIN * scale).max(0.0)
}

fn requirement_penalty(points: &[(f64, f64)], req: PositionRequirement, scale: f64) -> f64 {
    match req {
        PositionRequirement::Any => 0.0,
        PositionRequirement::Weak => {
            let fpts: Vec<Point<f64>> = points.iter().map(|&p| fpoint(p)).collect();
            if fpts.len() < 3 {
                return 0.0;
            }
            let hull = convex_hull(&fpts).expect("nonempty");
            points.iter().map(|&p| depth_inside(p, &hull)).sum()
        }
        PositionRequirement::Strict => {
            let fpts: Vec<Point<f64>> = points.iter().map(|&p| fpoint(p)).collect();
            let mut total = 0.0;
            for (i, &p) in points.iter().enumerate() {
                let others: Vec<Point<f64>> = fpts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, q)| q.clone())
                    .collect();
                total += strict_violation(p, &others, scale);
            }
            total
        }
    }
}

/// Penalty of a float configuration against the target: zero exactly when
/// vertices and midpoints satisfy their requirements with margin and no two
/// required-distinct points come closer than the separation threshold.
pub fn violation_penalty(positions: &[(f64, f64)], graph: &Graph, target: DrawingClass) -> f64 {
    assert_eq!(positions.len(), graph.vertex_count());
    let mids: Vec<(f64, f64)> = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            (
                (positions[u].0 + positions[v].0) / 2.0,
                (positions[u].1 + positions[v].1) / 2.0,
            )
        })
        .collect();
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in positions.iter().chain(mids.iter()) {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let scale = ((hi.0 - lo.0).powi(2) + (hi.1 - lo.1).powi(2))
        .sqrt()
        .max(1e-9);

    let mut penalty = requirement_penalty(positions, target.vertices, scale);
    penalty += requirement_penalty(&mids, target.midpoints, scale);

    let sep = SEPARATION * scale;
    let mut coincidence = 0.0;
    let all: Vec<(f64, f64)> = positions.iter().chain(mids.iter()).copied().collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let d = ((all[i].0 - all[j].0).powi(2) + (all[i].1 - all[j].1).powi(2)).sqrt();
            coincidence += (sep - d).max(0.0);
        }
    }
    penalty + coincidence
}

/// Rationalizes float positions under the bound and runs the exact pipeline.
/// Returns the drawing only when validation and classification certify the
/// target.
pub fn rationalize_and_certify(
    graph: &Graph,
    positions: &[(f64, f64)],
    target: DrawingClass,
    denominator_bound: u64,
) -> Option<Drawing<Scalar>> {
    let pts: Option<Vec<Point<Scalar>>> = positions
        .iter()
        .map(|&(x, y)| {
            Some(Point::new(
                Scalar::from_rational(rationalize(x, denominator_bound)?),
                Scalar::from_rational(rationalize(y, denominator_bound)?),
            ))
        })
        .collect();
    let drawing = Drawing::new(graph.clone(), pts?).ok()?;
    drawing.validate().ok()?;
    let report = drawing.classify().ok()?;
    report.witnesses(target).then_some(drawing)
}

/// Random-restart perturbation search for a drawing meeting `target`.
pub fn find_drawing(
    graph: &Graph,
    target: DrawingClass,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    config.check()?;
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let mut best_overall = f64::INFINITY;
    let mut best_positions: Vec<(f64, f64)> = vec![(0.0, 0.0); n];
    let mut trace = Vec::with_capacity(config.restarts as usize);
    for restart in 0..config.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(u64::from(restart) + 1);
        let mut pos: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let mut pen = violation_penalty(&pos, graph, target);
        let mut step = config.initial_step;
        let mut restart_best = pen;
        for _ in 0..config.iterations {
            if pen == 0.0 {
                let mut bound = config.denominator_bound;
                for _ in 0..4 {
                    if let Some(d) = rationalize_and_certify(graph, &pos, target, bound) {
                        trace.push(0.0);
                        return Ok(SearchOutcome {
                            status: SearchStatus::Certified(d),
                            restarts_used: restart + 1,
                            penalty_trace: trace,
                        });
                    }
                    bound = bound.saturating_mul(2);
                }
                // rationalization missed: kick the configuration and go on
                for p in pos.iter_mut() {
                    p.0 += rng.gen_range(-1e-3..1e-3);
                    p.1 += rng.gen_range(-1e-3..1e-3);
                }
                pen = violation_penalty(&pos, graph, target);
            }
            let v = rng.gen_range(0..n);
            let old = pos[v];
            pos[v] = (
                old.0 + step * rng.gen_range(-1.0..1.0),
                old.1 + step * rng.gen_range(-1.0..1.0),
            );
            let cand = violation_penalty(&pos, graph, target);
            if cand <= pen {
                pen = cand;
            } else {
                pos[v] = old;
            }
            restart_best = restart_best.min(pen);
            step *= config.cooling;
        }
        trace.push(restart_best);
        if restart_best < best_overall {
            best_overall = restart_best;
            best_positions = pos;
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::Failed {
            best_penalty: best_overall,
            best_positions,
        },
        restarts_used: config.restarts,
        penalty_trace: trace,
    })
}

/// Classification of one member of the normalized one-missing-edge family on
/// four vertices: `(1,0), (0,0), (0,1), (a,b)` with the edge between the
/// third and fourth vertices removed.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub a: Rational,
    pub b: Rational,
    pub drawing_valid: bool,
    pub vertex_level: crate::geom::Convexity,
    pub midpoint_level: crate::geom::Convexity,
}

impl FamilyCheck {
    /// Would this member witness strictly convex vertices and midpoints?
    pub fn witnesses_strict_strict(&self) -> bool {
        self.drawing_valid
            && self.vertex_level == crate::geom::Convexity::Strict
            && self.midpoint_level == crate::geom::Convexity::Strict
    }
}

/// Exact classification over the normalized family. Requires `a, b > 0` and
/// `a + b > 1` (the fourth vertex outside the triangle of the others).
pub fn k4e_family_check(a: Rational, b: Rational) -> Result<FamilyCheck> {
    use num_traits::Signed as _;
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("need a, b > 0".into()));
    }
    if (&a + &b) <= Rational::from_integer(BigInt::from(1)) {
        return Err(Error::Precondition("need a + b > 1".into()));
    }
    let graph = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?;
    let positions = vec![
        Point::new(Scalar::from_int(1), Scalar::from_int(0)),
        Point::new(Scalar::from_int(0), Scalar::from_int(0)),
        Point::new(Scalar::from_int(0), Scalar::from_int(1)),
        Point::new(
            Scalar::from_rational(a.clone()),
            Scalar::from_rational(b.clone()),
        ),
    ];
    let d = Drawing::new(graph, positions)?;
    let drawing_valid = d.validate().is_ok();
    let vertex_level = convexity_status(d.positions()).level();
    let midpoint_level = convexity_status(&d.midpoints()).level();
    Ok(FamilyCheck {
        a,
        b,
        drawing_valid,
        vertex_level,
        midpoint_level,
    })
}

/// A certified subdivision found by [`subdivision_explore`].
#[derive(Clone, Debug)]
pub struct CertifiedSubdivision {
    pub added_vertices: usize,
    pub pattern: Vec<(Edge, usize)>,
    pub drawing: Drawing<Scalar>,
}

#[derive(Clone, Debug)]
pub struct SubdivisionOutcome {
    pub certified: Option<CertifiedSubdivision>,
    pub patterns_tried: usize,
}

/// Searches subdivisions of `graph` for a drawing meeting `target`, trying
/// total subdivision counts 0..=cap. For each count the patterns place an
/// equal number of new vertices on each edge of a chosen subset (all subsets
/// whose size divides the count); the full pattern space is exponential and
/// is deliberately not enumerated.
pub fn subdivision_explore(
    graph: &Graph,
    target: DrawingClass,
    max_subdivisions: usize,
    config: &SearchConfig,
) -> Result<SubdivisionOutcome> {
    config.check()?;
    let m = graph.edge_count();
    let mut patterns_tried = 0usize;
    for total in 0..=max_subdivisions {
        let mut found: Option<CertifiedSubdivision> = None;
        if total == 0 {
            patterns_tried += 1;
            let outcome = find_drawing(graph, target, &salted(config, patterns_tried))?;
            if let SearchStatus::Certified(d) = outcome.status {
                found = Some(CertifiedSubdivision {
                    added_vertices: 0,
                    pattern: vec![],
                    drawing: d,
                });
            }
        } else {
            for subset_size in 1..=m.min(total) {
                if total % subset_size != 0 {
                    continue;
                }
                let per_edge = total / subset_size;
                let mut hit = false;
                for_each_combination(m, subset_size, |combo| {
                    patterns_tried += 1;
                    let pattern: Vec<(Edge, usize)> = combo
                        .iter()
                        .map(|&i| (graph.edges()[i], per_edge))
                        .collect();
                    let subdivided = graph.subdivide(&pattern).expect("edges exist");
                    let outcome =
                        find_drawing(&subdivided, target, &salted(config, patterns_tried))
                            .expect("config checked");
                    if let SearchStatus::Certified(d) = outcome.status {
                        found = Some(CertifiedSubdivision {
                            added_vertices: total,
                            pattern,
                            drawing: d,
                        });
                        hit = true;
                    }
                    hit
                });
                if hit {
                    break;
                }
            }
        }
        if found.is_some() {
            return Ok(SubdivisionOutcome {
                certified: found,
                patterns_tried,
            });
        }
    }
    Ok(SubdivisionOutcome {
        certified: None,
        patterns_tried,
    })
}

fn salted(config: &SearchConfig, salt: usize) -> SearchConfig {
    let mut c = config.clone();
    c.seed = config
        .seed
        .wrapping_add((salt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    c
}
