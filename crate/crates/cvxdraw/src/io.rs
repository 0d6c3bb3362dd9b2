//! Text formats for drawings, graphs, and point sets.
//!
//! Drawing files:
//! ```text
//! vertices <n>
//! <id> <x> <y>     (n lines, scalar syntax `p/q` or `A+B*sqrtD`)
//! edges <m>
//! <u> <v>          (m lines, u < v)
//! ```
//! Graph files use the same layout without the coordinate lines; point-set
//! files are `points <N>` followed by `<x> <y>` lines. `#` starts a comment.
//! Writers are canonical (ids ascending, edges sorted, reduced scalars), so a
//! write/read/write cycle is bit-exact.

use crate::drawing::Drawing;
use crate::geom::Point;
use crate::graph::Graph;
use crate::minkowski::PointSet;
use crate::{Error, Result, Scalar};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => l[..i].trim(),
            None => l.trim(),
        })
        .filter(|l| !l.is_empty())
}

fn expect_count(line: Option<&str>, keyword: &str) -> Result<usize> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing `{keyword}` line")))?;
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(v), None) if k == keyword => v
            .parse()
            .map_err(|_| Error::Parse(format!("bad count in `{line}`"))),
        _ => Err(Error::Parse(format!(
            "expected `{keyword} <count>`, found `{line}`"
        ))),
    }
}

pub fn write_drawing(d: &Drawing<Scalar>) -> String {
    let mut out = String::new();
    out.push_str(&format!("vertices {}\n", d.vertex_count()));
    for (i, p) in d.positions().iter().enumerate() {
        out.push_str(&format!("{} {} {}\n", i, p.x, p.y));
    }
    out.push_str(&format!("edges {}\n", d.edge_count()));
    for &(u, v) in d.graph().edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_drawing(text: &str) -> Result<Drawing<Scalar>> {
    let mut lines = content_lines(text);
    let n = expect_count(lines.next(), "vertices")?;
    let mut positions: Vec<Option<Point<Scalar>>> = vec![None; n];
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("unexpected end of vertex list".into()))?;
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next(), it.next()) {
            (Some(id), Some(x), Some(y), None) => {
                let id: usize = id
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex id in `{line}`")))?;
                if id >= n {
                    return Err(Error::Parse(format!("vertex id {id} out of range")));
                }
                if positions[id].is_some() {
                    return Err(Error::Parse(format!("vertex {id} listed twice")));
                }
                positions[id] = Some(Point::new(x.parse()?, y.parse()?));
            }
            _ => return Err(Error::Parse(format!("bad vertex line `{line}`"))),
        }
    }
    let positions: Vec<Point<Scalar>> = positions
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::Parse(format!("vertex {i} missing"))))
        .collect::<Result<_>>()?;
    let graph = read_edge_section(&mut lines, n)?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after edge list".into()));
    }
    Drawing::new_exact(graph, positions)
}

fn read_edge_section<'a>(lines: &mut impl Iterator<Item = &'a str>, n: usize) -> Result<Graph> {
    let m = expect_count(lines.next(), "edges")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("unexpected end of edge list".into()))?;
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => {
                let u: usize = u
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge line `{line}`")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge line `{line}`")))?;
                edges.push((u, v));
            }
            _ => return Err(Error::Parse(format!("bad edge line `{line}`"))),
        }
    }
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("vertices {}\n", g.vertex_count()));
    out.push_str(&format!("edges {}\n", g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = expect_count(lines.next(), "vertices")?;
    let graph = read_edge_section(&mut lines, n)?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after edge list".into()));
    }
    Ok(graph)
}

pub fn write_point_set(ps: &PointSet) -> String {
    let mut out = String::new();
    out.push_str(&format!("points {}\n", ps.len()));
    for p in ps.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

pub fn read_point_set(text: &str) -> Result<PointSet> {
    let mut lines = content_lines(text);
    let count = expect_count(lines.next(), "points")?;
    let mut pts = Vec::with_capacity(count);
    for _ in 0..count {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("unexpected end of point list".into()))?;
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(x), Some(y), None) => pts.push(Point::new(x.parse()?, y.parse()?)),
            _ => return Err(Error::Parse(format!("bad point line `{line}`"))),
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after point list".into()));
    }
    PointSet::new(pts)
}
