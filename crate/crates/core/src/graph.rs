//! Undirected multigraphs, their degrees and induced subgraphs, and
//! enumeration of edge orientations.
//!
//! Vertices are identified by positive integers. A parsed graph has vertices
//! `1..=n`; induced subgraphs keep the identifiers of the graph they came
//! from, so a vertex list may have gaps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the number of edges for any routine that walks every
/// orientation of a graph.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// An undirected edge. `u == w` encodes a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub w: usize,
}

impl Edge {
    pub fn new(u: usize, w: usize) -> Self {
        Edge { u, w }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.w
    }

    pub fn touches(&self, v: usize) -> bool {
        self.u == v || self.w == v
    }

    /// The endpoint opposite `v`, or `v` itself for a loop.
    pub fn other(&self, v: usize) -> usize {
        if self.u == v {
            self.w
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
    degrees: Vec<usize>,
}

impl Multigraph {
    /// Graph on vertices `1..=n`.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::with_vertices((1..=n).collect(), edges)
    }

    /// Graph on an explicit vertex list. The list is sorted and deduplicated.
    pub fn with_vertices(mut vertices: Vec<usize>, edges: Vec<Edge>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let mut degrees = vec![0; vertices.len()];
        for e in &edges {
            for end in [e.u, e.w] {
                let pos = vertices
                    .binary_search(&end)
                    .map_err(|_| Error::UnknownVertex(end))?;
                degrees[pos] += 1;
            }
        }
        Ok(Multigraph {
            vertices,
            edges,
            degrees,
        })
    }

    /// Convenience constructor from endpoint pairs on vertices `1..=n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, w)| Edge::new(u, w)).collect())
    }

    /// Complete simple graph on `1..=n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for w in u + 1..=n {
                edges.push(Edge::new(u, w));
            }
        }
        Self::new(n, edges).expect("complete graph endpoints are in range")
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Position of `v` in [`Multigraph::vertices`].
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position(v).is_some()
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.position(v)
            .map(|p| self.degrees[p])
            .ok_or(Error::UnknownVertex(v))
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn check_vertices<'a>(&self, vs: impl IntoIterator<Item = &'a usize>) -> Result<()> {
        for &v in vs {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(())
    }

    /// The subgraph on `keep` holding every edge with both ends in `keep`.
    /// Vertices of `keep` that are not in the graph are ignored.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> Multigraph {
        let vertices: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| keep.contains(v))
            .collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| keep.contains(&e.u) && keep.contains(&e.w))
            .collect();
        Multigraph::with_vertices(vertices, edges).expect("induced edges stay inside keep")
    }

    /// Indices of the edges with at least one end in `w`.
    pub fn edges_meeting(&self, w: &BTreeSet<usize>) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| w.contains(&e.u) || w.contains(&e.w))
            .map(|(i, _)| i)
            .collect()
    }

    /// Every vertex not in `w`, in order.
    pub fn complement(&self, w: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| !w.contains(v))
            .collect()
    }

    pub fn all_orientations(&self, limit: usize) -> Result<Orientations<'_>> {
        if self.edge_count() > limit {
            return Err(Error::limit("orientation enumeration", self.edge_count(), limit));
        }
        let space = OrientationSpace::new(self);
        Ok(Orientations {
            total: space.len(),
            space,
            next: 0,
        })
    }

    /// Parses the edge-list format: a header line `n m` followed by exactly
    /// `m` lines `u w`. Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (a, b) = parse_pair(line, line_no)?;
            match header {
                None => header = Some((a, b)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("header declares {m} edges but more follow"),
                        });
                    }
                    for end in [a, b] {
                        if end == 0 || end > n {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("endpoint {end} outside 1..={n}"),
                            });
                        }
                    }
                    edges.push(Edge::new(a, b));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse {
            line: last_line.max(1),
            message: "missing \"n m\" header".to_string(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: format!("header declares {m} edges but {} were given", edges.len()),
            });
        }
        Multigraph::new(n, edges)
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| bad(format!("expected two integers, got {line:?}")))?;
        tok.parse::<usize>()
            .map_err(|_| bad(format!("not a nonnegative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if tokens.next().is_some() {
        return Err(bad(format!("expected two integers, got {line:?}")));
    }
    Ok((a, b))
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Multigraph::parse(s)
    }
}

impl fmt::Display for Multigraph {
    /// Writes the graph back in edge-list form. Only meaningful for graphs
    /// on `1..=n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.vertices.last().copied().unwrap_or(0);
        writeln!(f, "{} {}", n, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {}", e.u, e.w)?;
        }
        Ok(())
    }
}

/// A direction for every edge, stored as `(tail, head)` per edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn tail(&self, edge: usize) -> usize {
        self.arcs[edge].0
    }

    pub fn head(&self, edge: usize) -> usize {
        self.arcs[edge].1
    }

    /// Out-degrees in the vertex order of `g`. A loop adds one to its vertex.
    pub fn out_degrees(&self, g: &Multigraph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for &(tail, _) in &self.arcs {
            out[g.position(tail).expect("arc tail is a vertex")] += 1;
        }
        out
    }
}

/// Indexes the orientations of a graph by bitmask over its non-loop edges.
/// Bit `k` set means the `k`-th non-loop edge runs from `w` to `u`.
#[derive(Debug, Clone)]
pub struct OrientationSpace<'g> {
    graph: &'g Multigraph,
    free: Vec<usize>,
}

impl<'g> OrientationSpace<'g> {
    pub fn new(graph: &'g Multigraph) -> Self {
        let free = graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_loop())
            .map(|(i, _)| i)
            .collect();
        OrientationSpace { graph, free }
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    /// Edge indices of the non-loop edges, in bit order.
    pub fn free_edges(&self) -> &[usize] {
        &self.free
    }

    /// Number of orientations, `2^(non-loop edges)`.
    pub fn len(&self) -> u64 {
        1u64 << self.free.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orientation(&self, mask: u64) -> Orientation {
        let mut arcs: Vec<(usize, usize)> =
            self.graph.edges().iter().map(|e| (e.u, e.w)).collect();
        for (bit, &ei) in self.free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let e = self.graph.edges()[ei];
                arcs[ei] = (e.w, e.u);
            }
        }
        Orientation { arcs }
    }
}

/// Iterator over every orientation of a graph, each exactly once.
#[derive(Debug, Clone)]
pub struct Orientations<'g> {
    space: OrientationSpace<'g>,
    next: u64,
    total: u64,
}

impl Iterator for Orientations<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.total {
            return None;
        }
        let o = self.space.orientation(self.next);
        self.next += 1;
        Some(o)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations<'_> {}
