//! SVG rendering of drawings: filled vertex dots, hollow midpoint dots, edge
//! segments, and the two hull outlines. Rendering only; coordinates are
//! emitted as decimals and never read back.

use crate::drawing::Drawing;
use crate::geom::convex_hull;
use crate::{Result, Scalar};

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 0.05;

/// Formats with 12 significant digits.
fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Renders a drawing into a 1000 x 1000 viewbox with a 5% margin.
pub fn render(d: &Drawing<Scalar>) -> Result<String> {
    let pts: Vec<(f64, f64)> = d
        .positions()
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let mids: Vec<(f64, f64)> = d
        .midpoints()
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts.iter().chain(mids.iter()) {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-12);
    let scale = VIEW * (1.0 - 2.0 * MARGIN) / span;
    let off = VIEW * MARGIN;
    // y flips: SVG grows downward
    let tx = |p: (f64, f64)| -> (f64, f64) {
        (
            off + (p.0 - lo.0) * scale,
            VIEW - off - (p.1 - lo.1) * scale,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {VIEW} {VIEW}\">\n"
    ));
    let polygon = |points: &[(f64, f64)], class: &str| -> String {
        let coords: Vec<String> = points
            .iter()
            .map(|&p| {
                let (x, y) = tx(p);
                format!("{},{}", sig(x), sig(y))
            })
            .collect();
        format!(
            "  <polygon class=\"{class}\" fill=\"none\" points=\"{}\"/>\n",
            coords.join(" ")
        )
    };
    if pts.len() >= 2 {
        let hull = convex_hull(d.positions())?;
        let hull_f: Vec<(f64, f64)> = hull.iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
        out.push_str(&polygon(&hull_f, "vertex-hull"));
        out.push_str(&format!("  <!-- vertex hull: {} corners -->\n", hull.len()));
    }
    if !mids.is_empty() {
        let mid_hull = convex_hull(&d.midpoints())?;
        let hull_f: Vec<(f64, f64)> = mid_hull
            .iter()
            .map(|p| (p.x.to_f64(), p.y.to_f64()))
            .collect();
        out.push_str(&polygon(&hull_f, "midpoint-hull"));
    }
    for &(u, v) in d.graph().edges() {
        let (x1, y1) = tx(pts[u]);
        let (x2, y2) = tx(pts[v]);
        out.push_str(&format!(
            "  <line class=\"edge\" stroke=\"black\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            sig(x1),
            sig(y1),
            sig(x2),
            sig(y2)
        ));
    }
    for &p in &pts {
        let (x, y) = tx(p);
        out.push_str(&format!(
            "  <circle class=\"vertex\" fill=\"black\" r=\"7\" cx=\"{}\" cy=\"{}\"/>\n",
            sig(x),
            sig(y)
        ));
    }
    for &p in &mids {
        let (x, y) = tx(p);
        out.push_str(&format!(
            "  <circle class=\"midpoint\" fill=\"none\" stroke=\"black\" r=\"5\" cx=\"{}\" cy=\"{}\"/>\n",
            sig(x),
            sig(y)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
