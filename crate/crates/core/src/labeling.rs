//! Labelings of a graph under per-vertex capacities.
//!
//! A labeling sends every edge either to one of its ends or to infinity, and
//! may send at most `m(v)` edges to each vertex `v`. Its height is the number
//! of edges not sent to infinity. The largest achievable height is a
//! capacitated bipartite matching between edges and vertex slots, which
//! [`max_height`] solves with augmenting paths.

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest edge count accepted by [`exhaustive_max_height`].
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 6;

/// Per-vertex capacities `m(v)`. Vertices without an entry have capacity 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    caps: BTreeMap<usize, usize>,
}

impl AlphaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Capacities for vertices `1..=caps.len()`.
    pub fn from_slice(caps: &[usize]) -> Self {
        caps.iter()
            .enumerate()
            .map(|(i, &m)| (i + 1, m))
            .collect()
    }

    /// Capacity equal to the degree of every vertex.
    pub fn degrees_of(g: &Multigraph) -> Self {
        g.vertices()
            .iter()
            .zip(g.degrees())
            .map(|(&v, &d)| (v, d))
            .collect()
    }

    pub fn get(&self, v: usize) -> usize {
        self.caps.get(&v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: usize, m: usize) {
        if m == 0 {
            self.caps.remove(&v);
        } else {
            self.caps.insert(v, m);
        }
    }

    pub fn total(&self) -> usize {
        self.caps.values().sum()
    }

    /// Values in the vertex order of `g`.
    pub fn to_vec(&self, g: &Multigraph) -> Vec<usize> {
        g.vertices().iter().map(|&v| self.get(v)).collect()
    }

    pub fn check_against(&self, g: &Multigraph) -> Result<()> {
        g.check_vertices(self.caps.keys())
    }
}

impl FromIterator<(usize, usize)> for AlphaVector {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut alpha = AlphaVector::zero();
        for (v, m) in iter {
            alpha.set(v, m);
        }
        alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Vertex(usize),
    Infinity,
}

impl Label {
    pub fn is_finite(&self) -> bool {
        matches!(self, Label::Vertex(_))
    }
}

/// One label per edge, indexed like [`Multigraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling(pub Vec<Label>);

impl Labeling {
    pub fn all_infinity(edges: usize) -> Self {
        Labeling(vec![Label::Infinity; edges])
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    /// Number of edges not labeled infinity.
    pub fn height(&self) -> usize {
        self.0.iter().filter(|l| l.is_finite()).count()
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (i, label) in self.0.iter().enumerate() {
            match label {
                Label::Vertex(v) => map.serialize_entry(&i.to_string(), v)?,
                Label::Infinity => map.serialize_entry(&i.to_string(), "inf")?,
            }
        }
        map.end()
    }
}

/// Checks that every edge goes to one of its ends or to infinity and that no
/// vertex receives more edges than its capacity.
pub fn is_valid_labeling(g: &Multigraph, alpha: &AlphaVector, phi: &Labeling) -> Result<bool> {
    if phi.0.len() != g.edge_count() {
        return Err(Error::LabelingLength {
            expected: g.edge_count(),
            got: phi.0.len(),
        });
    }
    let mut load: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ends_ok = true;
    for (e, label) in g.edges().iter().zip(&phi.0) {
        if let Label::Vertex(v) = *label {
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            ends_ok &= e.touches(v);
            *load.entry(v).or_default() += 1;
        }
    }
    Ok(ends_ok && load.iter().all(|(&v, &n)| n <= alpha.get(v)))
}

pub fn height(phi: &Labeling) -> usize {
    phi.height()
}

/// Maximum height over all labelings of `g` under `alpha`, with a labeling
/// that attains it.
pub fn max_height(g: &Multigraph, alpha: &AlphaVector) -> (usize, Labeling) {
    let caps = alpha.to_vec(g);
    let mut solver = SlotMatcher::new(g, &caps);
    let mut height = 0;
    for e in 0..g.edge_count() {
        solver.visited.fill(false);
        if solver.augment(e) {
            height += 1;
        }
    }
    let labels = solver
        .assigned
        .iter()
        .map(|slot| match slot {
            Some(p) => Label::Vertex(g.vertices()[*p]),
            None => Label::Infinity,
        })
        .collect();
    (height, Labeling(labels))
}

/// Edges on one side, vertices with `caps[p]` slots on the other.
struct SlotMatcher {
    ends: Vec<[usize; 2]>,
    caps: Vec<usize>,
    holders: Vec<Vec<usize>>,
    assigned: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl SlotMatcher {
    fn new(g: &Multigraph, caps: &[usize]) -> Self {
        let ends = g
            .edges()
            .iter()
            .map(|e| {
                [
                    g.position(e.u).expect("edge end is a vertex"),
                    g.position(e.w).expect("edge end is a vertex"),
                ]
            })
            .collect();
        SlotMatcher {
            ends,
            caps: caps.to_vec(),
            holders: vec![Vec::new(); g.vertex_count()],
            assigned: vec![None; g.edge_count()],
            visited: vec![false; g.vertex_count()],
        }
    }

    /// Places edge `e` on a vertex, possibly moving other edges along an
    /// augmenting path. `e` must not currently be placed anywhere it could
    /// conflict with, i.e. callers re-route an edge only after marking its
    /// current vertex visited.
    fn augment(&mut self, e: usize) -> bool {
        let [a, b] = self.ends[e];
        let ends = if a == b { &[a][..] } else { &[a, b][..] };
        for &p in ends {
            if self.visited[p] {
                continue;
            }
            self.visited[p] = true;
            if self.holders[p].len() < self.caps[p] {
                self.holders[p].push(e);
                self.assigned[e] = Some(p);
                return true;
            }
            for k in 0..self.holders[p].len() {
                let other = self.holders[p][k];
                if self.augment(other) {
                    self.holders[p][k] = e;
                    self.assigned[e] = Some(p);
                    return true;
                }
            }
        }
        false
    }
}

/// Maximum height found by trying every assignment of edges to
/// `{ends, infinity}` and keeping those within capacity. Independent of
/// [`max_height`]; used to check it.
pub fn exhaustive_max_height(g: &Multigraph, alpha: &AlphaVector) -> Result<usize> {
    if g.edge_count() > EXHAUSTIVE_EDGE_LIMIT {
        return Err(Error::limit(
            "exhaustive labeling search",
            g.edge_count(),
            EXHAUSTIVE_EDGE_LIMIT,
        ));
    }
    let choices: Vec<Vec<Label>> = g
        .edges()
        .iter()
        .map(|e| {
            let mut c = vec![Label::Vertex(e.u)];
            if !e.is_loop() {
                c.push(Label::Vertex(e.w));
            }
            c.push(Label::Infinity);
            c
        })
        .collect();
    let mut pick = vec![0usize; choices.len()];
    let mut best = 0;
    loop {
        let phi = Labeling(
            pick.iter()
                .zip(&choices)
                .map(|(&i, c)| c[i])
                .collect(),
        );
        if phi.height() > best && is_valid_labeling(g, alpha, &phi)? {
            best = phi.height();
        }
        // odometer step
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(best);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}
