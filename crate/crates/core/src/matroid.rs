//! The matroid `TM(G)` on the ground set `S = {(v, i) : 1 <= i <= deg(v)}`
//! and its deletions `TM(G, W) = TM(G) \ S(W)`.
//!
//! The rank of `X` is the maximum height of a labeling of `G` whose
//! capacities are the per-vertex counts of `X`. Deleting a perfect subset is
//! a restriction of the same rank function to a smaller ground set. The dual
//! of `TM(G, W)` is presented by the edge sets `A(e)` of the edges of
//! `G[V \ W]`, still measured with the degrees of `G`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::labeling::{max_height, AlphaVector, Labeling};
use crate::oracle::SetSystem;

/// Default largest ground set that [`check_self_dual`] sweeps exhaustively.
pub const SELF_DUAL_EXHAUSTIVE_LIMIT: usize = 16;

/// The pair `(v, i)`; written `v:i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundElement {
    pub vertex: usize,
    pub index: usize,
}

impl GroundElement {
    pub fn new(vertex: usize, index: usize) -> Self {
        GroundElement { vertex, index }
    }
}

impl fmt::Display for GroundElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex, self.index)
    }
}

impl FromStr for GroundElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadToken(s.to_string());
        let (v, i) = s.trim().split_once(':').ok_or_else(bad)?;
        let vertex = v.trim().parse().map_err(|_| bad())?;
        let index = i.trim().parse().map_err(|_| bad())?;
        Ok(GroundElement { vertex, index })
    }
}

impl Serialize for GroundElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroundElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of `v:i` tokens. An empty or blank string
/// is the empty set.
pub fn parse_subset(text: &str) -> Result<Vec<GroundElement>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// All elements `(v, i)` of `g`, sorted by vertex then index.
pub fn ground_set(g: &Multigraph) -> Vec<GroundElement> {
    perfect_subset(g, &g.vertices().iter().copied().collect())
}

/// `S(W)`: every `(v, i)` with `v` in `w`.
pub fn perfect_subset(g: &Multigraph, w: &BTreeSet<usize>) -> Vec<GroundElement> {
    g.vertices()
        .iter()
        .zip(g.degrees())
        .filter(|(v, _)| w.contains(v))
        .flat_map(|(&v, &d)| (1..=d).map(move |i| GroundElement::new(v, i)))
        .collect()
}

/// An ordered family of ground subsets, one per listed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    /// Edge indices into the graph, one per set.
    pub edges: Vec<usize>,
    pub sets: Vec<Vec<GroundElement>>,
    pub ground: Vec<GroundElement>,
}

impl Presentation {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn to_set_system(&self) -> SetSystem<GroundElement> {
        SetSystem::new(self.ground.clone(), self.sets.clone())
            .expect("presentation sets lie in its ground")
    }
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sets.serialize(serializer)
    }
}

/// `TM(G, W)`: a graph, a deleted vertex set and the remaining ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidHandle {
    graph: Multigraph,
    deleted: BTreeSet<usize>,
    ground: Vec<GroundElement>,
}

impl MatroidHandle {
    /// `TM(G)`.
    pub fn new(graph: Multigraph) -> Self {
        let ground = ground_set(&graph);
        MatroidHandle {
            graph,
            deleted: BTreeSet::new(),
            ground,
        }
    }

    /// `TM(G, W)` directly.
    pub fn with_deleted(graph: Multigraph, w: &BTreeSet<usize>) -> Result<Self> {
        MatroidHandle::new(graph).delete(w)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn deleted(&self) -> &BTreeSet<usize> {
        &self.deleted
    }

    pub fn ground(&self) -> &[GroundElement] {
        &self.ground
    }

    /// `|E|`, the rank of the undeleted matroid `TM(G)`.
    pub fn rank_of_whole(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edges of `G[V \ W]`; their number is the rank of the dual.
    pub fn kept_edges(&self) -> Vec<usize> {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| !self.deleted.contains(&e.u) && !self.deleted.contains(&e.w))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn contains(&self, x: &GroundElement) -> bool {
        !self.deleted.contains(&x.vertex)
            && self
                .graph
                .degree(x.vertex)
                .is_ok_and(|d| (1..=d).contains(&x.index))
    }

    fn check_subset(&self, x: &[GroundElement]) -> Result<()> {
        match x.iter().find(|e| !self.contains(e)) {
            Some(e) => Err(Error::OutsideGround(*e)),
            None => Ok(()),
        }
    }

    /// Removes `S(w)` from the ground set. Deletions accumulate.
    pub fn delete(&self, w: &BTreeSet<usize>) -> Result<MatroidHandle> {
        self.graph.check_vertices(w)?;
        let deleted: BTreeSet<usize> = self.deleted.union(w).copied().collect();
        let ground = self
            .ground
            .iter()
            .copied()
            .filter(|x| !deleted.contains(&x.vertex))
            .collect();
        Ok(MatroidHandle {
            graph: self.graph.clone(),
            deleted,
            ground,
        })
    }

    /// Per-vertex counts of the distinct elements of `x`.
    pub fn alpha_of(&self, x: &[GroundElement]) -> Result<AlphaVector> {
        self.check_subset(x)?;
        Ok(alpha_unchecked(x))
    }

    pub fn rank(&self, x: &[GroundElement]) -> Result<usize> {
        Ok(self.rank_with_witness(x)?.0)
    }

    /// Rank of `x` and a labeling of maximum height for `alpha_of(x)`.
    pub fn rank_with_witness(&self, x: &[GroundElement]) -> Result<(usize, Labeling)> {
        let alpha = self.alpha_of(x)?;
        Ok(max_height(&self.graph, &alpha))
    }

    /// Rank of the whole ground set.
    pub fn rank_of_ground(&self) -> usize {
        max_height(&self.graph, &alpha_unchecked(&self.ground)).0
    }

    pub fn is_independent(&self, x: &[GroundElement]) -> Result<bool> {
        let distinct: BTreeSet<_> = x.iter().collect();
        Ok(self.rank(x)? == distinct.len())
    }

    pub fn is_basis(&self, b: &[GroundElement]) -> Result<bool> {
        let distinct: BTreeSet<_> = b.iter().collect();
        self.check_subset(b)?;
        Ok(distinct.len() == self.rank_of_ground() && self.is_independent(b)?)
    }

    /// `A(e) = {(x, i) : x an end of e, 1 <= i <= deg(x)}` restricted to the
    /// current ground set, one set per edge of `G`. For `TM(G)` this is the
    /// presentation of the matroid itself; after deleting `S(W)` it is the
    /// standard presentation of the deletion.
    pub fn primal_presentation(&self) -> Presentation {
        let edges: Vec<usize> = (0..self.graph.edge_count()).collect();
        self.presentation_over(edges)
    }

    /// The family `(A(e), e in G[V \ W])`, with `A(e)` built from the degrees
    /// of the full graph. It presents the dual of `TM(G, W)` on the same
    /// ground set.
    pub fn dual_presentation(&self) -> Presentation {
        self.presentation_over(self.kept_edges())
    }

    fn presentation_over(&self, edges: Vec<usize>) -> Presentation {
        let sets = edges
            .iter()
            .map(|&ei| {
                let e = self.graph.edges()[ei];
                let ends: BTreeSet<usize> = [e.u, e.w].into_iter().collect();
                perfect_subset(&self.graph, &ends)
                    .into_iter()
                    .filter(|x| !self.deleted.contains(&x.vertex))
                    .collect()
            })
            .collect();
        Presentation {
            edges,
            sets,
            ground: self.ground.clone(),
        }
    }
}

fn alpha_unchecked(x: &[GroundElement]) -> AlphaVector {
    let distinct: BTreeSet<_> = x.iter().collect();
    let mut alpha = AlphaVector::zero();
    for e in distinct {
        alpha.set(e.vertex, alpha.get(e.vertex) + 1);
    }
    alpha
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDualMode {
    /// Every `r`-subset of the ground set, up to the given ground size.
    Exhaustive { limit: usize },
    /// Bases grown greedily along seeded random orderings of the ground set.
    Sample { draws: usize, seed: u64 },
}

impl Default for SelfDualMode {
    fn default() -> Self {
        SelfDualMode::Exhaustive {
            limit: SELF_DUAL_EXHAUSTIVE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfDualReport {
    /// Bases examined (distinct in exhaustive mode).
    pub bases: usize,
    /// How many of those had a complement that is also a basis.
    pub complements_are_bases: usize,
    pub counterexample: Option<Vec<GroundElement>>,
}

impl SelfDualReport {
    pub fn is_self_dual(&self) -> bool {
        self.counterexample.is_none() && self.bases == self.complements_are_bases
    }
}

/// Checks that the complement of every basis is a basis.
pub fn check_self_dual(m: &MatroidHandle, mode: SelfDualMode) -> Result<bool> {
    Ok(self_dual_report(m, mode)?.is_self_dual())
}

pub fn self_dual_report(m: &MatroidHandle, mode: SelfDualMode) -> Result<SelfDualReport> {
    let ground = m.ground();
    let r = m.rank_of_ground();
    let complement = |b: &[GroundElement]| -> Vec<GroundElement> {
        ground.iter().copied().filter(|x| !b.contains(x)).collect()
    };
    let mut report = SelfDualReport {
        bases: 0,
        complements_are_bases: 0,
        counterexample: None,
    };
    let mut visit = |b: Vec<GroundElement>| -> Result<()> {
        report.bases += 1;
        if m.is_basis(&complement(&b))? {
            report.complements_are_bases += 1;
        } else if report.counterexample.is_none() {
            report.counterexample = Some(b);
        }
        Ok(())
    };
    match mode {
        SelfDualMode::Exhaustive { limit } => {
            if ground.len() > limit {
                return Err(Error::limit("exhaustive self-duality sweep", ground.len(), limit));
            }
            for b in ground.iter().copied().combinations(r) {
                if m.rank(&b)? == r {
                    visit(b)?;
                }
            }
        }
        SelfDualMode::Sample { draws, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order = ground.to_vec();
            for _ in 0..draws {
                order.shuffle(&mut rng);
                let mut b = Vec::with_capacity(r);
                for &x in &order {
                    b.push(x);
                    if m.rank(&b)? < b.len() {
                        b.pop();
                    }
                }
                b.sort();
                visit(b)?;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: usize, i: usize) -> GroundElement {
        GroundElement::new(v, i)
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn k2() -> MatroidHandle {
        MatroidHandle::new(Multigraph::complete(2))
    }

    fn single_loop() -> MatroidHandle {
        MatroidHandle::new(Multigraph::parse("1 1\n1 1").unwrap())
    }

    #[test]
    fn tokens() {
        assert_eq!("3:2".parse::<GroundElement>().unwrap(), el(3, 2));
        assert_eq!(el(3, 2).to_string(), "3:2");
        assert!(matches!("3-2".parse::<GroundElement>(), Err(Error::BadToken(_))));
        assert!(matches!("a:1".parse::<GroundElement>(), Err(Error::BadToken(_))));
        assert_eq!(parse_subset("").unwrap(), vec![]);
        assert_eq!(parse_subset(" 1:1, 2:3 ").unwrap(), vec![el(1, 1), el(2, 3)]);
        assert_eq!(serde_json::to_string(&vec![el(1, 2)]).unwrap(), r#"["1:2"]"#);
    }

    #[test]
    fn alpha_of_text_example() {
        let g = Multigraph::parse("6 10\n1 2\n1 3\n1 4\n1 6\n3 5\n4 5\n4 6\n5 6\n3 4\n5 6").unwrap();
        assert_eq!(g.degrees(), &[4, 1, 3, 4, 4, 4]);
        let m = MatroidHandle::new(g);
        let x: Vec<_> = [(1, 1), (1, 2), (1, 3), (1, 4), (3, 1), (3, 3), (4, 4), (5, 4), (6, 1), (6, 2), (6, 3)]
            .iter()
            .map(|&(v, i)| el(v, i))
            .collect();
        let alpha = m.alpha_of(&x).unwrap();
        assert_eq!(alpha.to_vec(m.graph()), vec![4, 0, 2, 1, 1, 3]);
    }

    #[test]
    fn alpha_of_simple_cases() {
        let m = MatroidHandle::new(Multigraph::complete(4));
        assert_eq!(m.alpha_of(&[]).unwrap(), AlphaVector::zero());
        let sw = perfect_subset(m.graph(), &set(&[2, 4]));
        assert_eq!(m.alpha_of(&sw).unwrap().to_vec(m.graph()), vec![0, 3, 0, 3]);
        assert_eq!(m.alpha_of(&[el(1, 4)]), Err(Error::OutsideGround(el(1, 4))));
        assert_eq!(m.alpha_of(&[el(9, 1)]), Err(Error::OutsideGround(el(9, 1))));
    }

    #[test]
    fn rank_examples() {
        let k4 = MatroidHandle::new(Multigraph::complete(4));
        assert_eq!(k4.rank(k4.ground()).unwrap(), 6);
        assert_eq!(k4.rank(&[]).unwrap(), 0);
        let k6 = MatroidHandle::new(Multigraph::complete(6));
        let sw = perfect_subset(k6.graph(), &set(&[5, 6]));
        assert_eq!(k6.rank(&sw).unwrap(), 9);
    }

    #[test]
    fn independence_and_bases_on_k2() {
        let m = k2();
        assert!(m.is_independent(&[]).unwrap());
        assert!(m.is_independent(&[el(1, 1)]).unwrap());
        assert!(!m.is_independent(&[el(1, 1), el(2, 1)]).unwrap());
        assert!(m.is_basis(&[el(1, 1)]).unwrap());
        assert!(!m.is_basis(&[el(1, 1), el(2, 1)]).unwrap());
        let edgeless = MatroidHandle::new(Multigraph::new(2, vec![]).unwrap());
        assert!(edgeless.is_basis(&[]).unwrap());
    }

    #[test]
    fn deletion() {
        let k4 = MatroidHandle::new(Multigraph::complete(4));
        assert_eq!(k4.delete(&set(&[])).unwrap(), k4);
        let all = k4.delete(&set(&[1, 2, 3, 4])).unwrap();
        assert!(all.ground().is_empty());
        assert_eq!(all.rank_of_ground(), 0);
        let k6w = MatroidHandle::with_deleted(Multigraph::complete(6), &set(&[5, 6])).unwrap();
        assert_eq!(k6w.ground().len(), 20);
        assert_eq!(k6w.rank_of_ground(), 14);
        assert!(matches!(k6w.rank(&[el(5, 1)]), Err(Error::OutsideGround(_))));
        assert_eq!(k4.delete(&set(&[7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn primal_presentations() {
        let p = k2().primal_presentation();
        assert_eq!(p.sets, vec![vec![el(1, 1), el(2, 1)]]);
        let p = single_loop().primal_presentation();
        assert_eq!(p.sets, vec![vec![el(1, 1), el(1, 2)]]);
        let p = MatroidHandle::new(Multigraph::complete(4)).primal_presentation();
        assert_eq!(p.len(), 6);
        assert!(p.sets.iter().all(|s| s.len() == 6));
        assert_eq!(serde_json::to_string(&k2().primal_presentation()).unwrap(), r#"[["1:1","2:1"]]"#);
    }

    #[test]
    fn dual_presentations() {
        let k4 = MatroidHandle::new(Multigraph::complete(4));
        assert!(k4.delete(&set(&[1, 2, 3, 4])).unwrap().dual_presentation().is_empty());
        assert_eq!(k4.dual_presentation(), k4.primal_presentation());
        let k6w = MatroidHandle::with_deleted(Multigraph::complete(6), &set(&[5, 6])).unwrap();
        let d = k6w.dual_presentation();
        assert_eq!(d.len(), 6);
        assert!(d.sets.iter().all(|s| s.len() == 10));
        assert_eq!(d.ground.len(), 20);
    }

    #[test]
    fn self_duality() {
        assert!(check_self_dual(&k2(), SelfDualMode::default()).unwrap());
        assert!(check_self_dual(&single_loop(), SelfDualMode::default()).unwrap());
        let k4 = MatroidHandle::new(Multigraph::complete(4));
        let report = self_dual_report(&k4, SelfDualMode::default()).unwrap();
        assert_eq!(report.bases, 918);
        assert!(report.is_self_dual());
        let sampled = self_dual_report(&MatroidHandle::new(Multigraph::complete(5)), SelfDualMode::Sample { draws: 50, seed: 7 }).unwrap();
        assert!(sampled.is_self_dual());
        assert!(matches!(
            check_self_dual(&MatroidHandle::new(Multigraph::complete(5)), SelfDualMode::default()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn deletion_is_not_self_dual_in_general() {
        let k3w = MatroidHandle::with_deleted(Multigraph::complete(3), &set(&[3])).unwrap();
        // rank 3 on a 4-element ground set whose dual has rank 1
        assert_eq!(k3w.rank_of_ground(), 3);
        assert!(!check_self_dual(&k3w, SelfDualMode::default()).unwrap());
    }
}
