//! Simple undirected graphs on vertices `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

pub type VertexId = usize;

/// Edge as an unordered pair, stored with the smaller endpoint first.
pub type Edge = (VertexId, VertexId);

pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph: vertex count plus a sorted edge list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edge_list {
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if !set.insert(edge(u, v)) {
                return Err(Error::Graph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending, smaller endpoint first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// Standard degeneracy: the largest minimum degree over the removal
    /// ordering that repeatedly deletes a minimum-degree vertex.
    pub fn degeneracy(&self) -> usize {
        let mut alive: Vec<bool> = vec![true; self.n];
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut remaining = self.n;
        let mut best = 0;
        while remaining > 0 {
            let v = (0..self.n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| deg[v])
                .unwrap();
            best = best.max(deg[v]);
            alive[v] = false;
            remaining -= 1;
            for &(a, b) in &self.edges {
                if a == v && alive[b] {
                    deg[b] -= 1;
                } else if b == v && alive[a] {
                    deg[a] -= 1;
                }
            }
        }
        best
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()` in the given
    /// order. Fails if `keep` repeats or goes out of range.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n {
                return Err(Error::Graph(format!("vertex {old} out of range")));
            }
            if map[old] != usize::MAX {
                return Err(Error::Graph(format!("vertex {old} repeated")));
            }
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]));
        Graph::new(keep.len(), edges)
    }

    /// Replaces each edge in `pattern` by a path with the given number of new
    /// internal vertices (appended after the original vertex range).
    pub fn subdivide(&self, pattern: &[(Edge, usize)]) -> Result<Graph> {
        let mut counts = std::collections::BTreeMap::new();
        for &(e, c) in pattern {
            let e = edge(e.0, e.1);
            if !self.has_edge(e.0, e.1) {
                return Err(Error::Graph(format!("no edge ({}, {})", e.0, e.1)));
            }
            counts.insert(e, c);
        }
        let mut next = self.n;
        let mut edges: Vec<Edge> = Vec::new();
        for &e in &self.edges {
            let c = counts.get(&e).copied().unwrap_or(0);
            if c == 0 {
                edges.push(e);
            } else {
                let mut prev = e.0;
                for _ in 0..c {
                    edges.push(edge(prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push(edge(prev, e.1));
            }
        }
        Graph::new(next, edges)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Graph("cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("valid")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}
