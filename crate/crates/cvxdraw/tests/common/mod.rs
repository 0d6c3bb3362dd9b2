//! Shared checks for the integration suites: the structural facts every
//! certified drawing with strictly convex vertices and weakly convex
//! midpoints has to satisfy.

use cvxdraw::drawing::{Drawing, DrawingClass};
use cvxdraw::seeing::seeing_profile;
use cvxdraw::Scalar;

/// No vertex sees an edge interior to it, and (outside degenerate midpoint
/// hulls) no vertex sees more than two incident edges.
pub fn check_no_interior_edge_seen(d: &Drawing<Scalar>, label: &str) -> Result<(), String> {
    let profile = seeing_profile(d).map_err(|e| format!("{label}: {e}"))?;
    for vs in &profile.per_vertex {
        for e in &vs.seen {
            if vs.interior.contains(e) {
                return Err(format!(
                    "{label}: vertex {} sees its interior edge ({}, {})",
                    vs.vertex, e.0, e.1
                ));
            }
        }
        if !profile.degenerate_midpoint_hull && vs.seen_incident > 2 {
            return Err(format!(
                "{label}: vertex {} sees {} incident edges",
                vs.vertex, vs.seen_incident
            ));
        }
    }
    Ok(())
}

/// Structure of drawings witnessing strict vertices + weak midpoints: every
/// edge is seen, at least three doubly exterior edges exist once the minimum
/// degree is 2 and there are 3 or more edges, the accounting identity holds
/// on non-degenerate instances, and the edge count respects 2n - 3.
pub fn check_weak_witness_structure(d: &Drawing<Scalar>, label: &str) -> Result<(), String> {
    let report = d.classify().map_err(|e| format!("{label}: {e}"))?;
    if !report.witnesses(DrawingClass::parse("sw").unwrap()) {
        return Err(format!(
            "{label}: not a strict-vertex weak-midpoint witness"
        ));
    }
    let n = d.vertex_count();
    let m = d.edge_count();
    if m > 2 * n - 3 {
        return Err(format!("{label}: {m} edges exceeds 2n-3 = {}", 2 * n - 3));
    }
    let profile = seeing_profile(d).map_err(|e| format!("{label}: {e}"))?;
    if !profile.unseen_edges.is_empty() {
        return Err(format!(
            "{label}: edges seen by neither endpoint: {:?}",
            profile.unseen_edges
        ));
    }
    if d.graph().min_degree() >= 2 && m >= 3 && profile.doubly_exterior < 3 {
        return Err(format!(
            "{label}: only {} doubly exterior edges",
            profile.doubly_exterior
        ));
    }
    if !profile.degenerate_midpoint_hull && !profile.accounting_identity_holds(m) {
        return Err(format!(
            "{label}: identity m = n1 + 2 n2 - good fails: m={m} n1={} n2={} good={}",
            profile.n1, profile.n2, profile.good_edges
        ));
    }
    Ok(())
}
