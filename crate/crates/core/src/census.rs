//! Out-degree classes of orientations and the exact basis count of
//! `TM(G, W)`.
//!
//! Two orientations are equivalent when they give every vertex the same
//! out-degree. The number of bases of `TM(G, W)` is the sum, over the
//! distinct out-degree vectors `a` of `G[V \ W]`, of
//! `prod_i binom(deg_G(v_i), a_i)`, where degrees come from the full graph.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, OrientationSpace};

/// Largest vertex count the feasibility enumeration accepts; it walks every
/// vertex subset.
pub const FEASIBILITY_VERTEX_LIMIT: usize = 16;

/// Orientations enumerated per parallel task.
const CHUNK_BITS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutDegreeClass {
    #[serde(rename = "a")]
    pub vector: Vec<usize>,
    #[serde(rename = "mult")]
    pub multiplicity: u64,
}

/// How the distinct out-degree vectors are found.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ClassMethod {
    /// Walk every orientation.
    #[default]
    Orientations,
    /// Enumerate candidate vectors and keep those passing the subset
    /// condition `sum_{v in U} a_v >= |E(G[U])|`. No multiplicities.
    Feasibility,
}

/// Every distinct out-degree vector of `g` with the number of orientations
/// producing it, sorted lexicographically. Vectors follow the vertex order
/// of `g`.
pub fn enumerate_classes(g: &Multigraph, limit: usize) -> Result<Vec<OutDegreeClass>> {
    if g.edge_count() > limit {
        return Err(Error::limit("orientation enumeration", g.edge_count(), limit));
    }
    let space = OrientationSpace::new(g);
    let free = space.free_edges().len();
    let low = free.min(CHUNK_BITS);
    let chunks = 1u64 << (free - low);

    let ends: Vec<(usize, usize)> = space
        .free_edges()
        .iter()
        .map(|&ei| {
            let e = g.edges()[ei];
            (g.position(e.u).unwrap(), g.position(e.w).unwrap())
        })
        .collect();

    let merged = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let base = chunk << low;
            let mut out: Vec<u32> = space
                .orientation(base)
                .out_degrees(g)
                .into_iter()
                .map(|d| d as u32)
                .collect();
            let mut reversed = vec![false; low];
            let mut seen: HashMap<Vec<u32>, u64> = HashMap::new();
            seen.insert(out.clone(), 1);
            // Gray code over the low bits: step i flips bit trailing_zeros(i).
            for step in 1u64..(1u64 << low) {
                let bit = step.trailing_zeros() as usize;
                let (u, w) = ends[bit];
                if reversed[bit] {
                    out[w] -= 1;
                    out[u] += 1;
                } else {
                    out[u] -= 1;
                    out[w] += 1;
                }
                reversed[bit] = !reversed[bit];
                match seen.get_mut(out.as_slice()) {
                    Some(c) => *c += 1,
                    None => {
                        seen.insert(out.clone(), 1);
                    }
                }
            }
            seen
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });

    let mut classes: Vec<OutDegreeClass> = merged
        .into_iter()
        .map(|(k, multiplicity)| OutDegreeClass {
            vector: k.into_iter().map(|d| d as usize).collect(),
            multiplicity,
        })
        .collect();
    classes.sort_by(|a, b| a.vector.cmp(&b.vector));
    Ok(classes)
}

/// Distinct out-degree vectors of `g` without walking orientations: a
/// vector is realizable iff it sums to `|E|` and every vertex subset `U`
/// has out-degree total at least the number of edges inside `U`.
pub fn feasible_classes(g: &Multigraph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > FEASIBILITY_VERTEX_LIMIT {
        return Err(Error::limit("feasibility enumeration", n, FEASIBILITY_VERTEX_LIMIT));
    }
    // inside[mask] = edges with both ends in mask
    let mut inside = vec![0usize; 1 << n];
    let mut loops = vec![0usize; n];
    for e in g.edges() {
        let (pu, pw) = (g.position(e.u).unwrap(), g.position(e.w).unwrap());
        if pu == pw {
            loops[pu] += 1;
        }
        let need = (1usize << pu) | (1usize << pw);
        for (mask, count) in inside.iter_mut().enumerate() {
            if mask & need == need {
                *count += 1;
            }
        }
    }
    let upper: Vec<usize> = (0..n).map(|p| g.degrees()[p] - loops[p]).collect();

    struct Search<'a> {
        n: usize,
        total: usize,
        inside: &'a [usize],
        lower: &'a [usize],
        upper: &'a [usize],
        suffix_max: Vec<usize>,
        a: Vec<usize>,
        found: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn go(&mut self, p: usize, used: usize) {
            if p == self.n {
                if used == self.total {
                    self.found.push(self.a.clone());
                }
                return;
            }
            for value in self.lower[p]..=self.upper[p] {
                if used + value > self.total {
                    break;
                }
                if used + value + self.suffix_max[p + 1] < self.total {
                    continue;
                }
                self.a[p] = value;
                // every subset of the assigned prefix that contains p is final
                let ok = (0..1usize << p).all(|rest| {
                    let mask = rest | (1 << p);
                    let sum: usize = (0..=p).filter(|q| mask >> q & 1 == 1).map(|q| self.a[q]).sum();
                    sum >= self.inside[mask]
                });
                if ok {
                    self.go(p + 1, used + value);
                }
            }
        }
    }

    let mut suffix_max = vec![0; n + 1];
    for p in (0..n).rev() {
        suffix_max[p] = suffix_max[p + 1] + upper[p];
    }
    let mut search = Search {
        n,
        total: g.edge_count(),
        inside: &inside,
        lower: &loops,
        upper: &upper,
        suffix_max,
        a: vec![0; n],
        found: Vec::new(),
    };
    search.go(0, 0);
    Ok(search.found)
}

/// `binom(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `prod_i binom(deg_{g_full}(keep_i), a_i)`.
pub fn class_weight(g_full: &Multigraph, keep: &[usize], a: &[usize]) -> Result<BigUint> {
    assert_eq!(keep.len(), a.len(), "one out-degree per kept vertex");
    let mut w = BigUint::one();
    for (&v, &ai) in keep.iter().zip(a) {
        w *= binomial(g_full.degree(v)?, ai);
    }
    Ok(w)
}

/// Exact number of bases of `TM(g, w)`.
pub fn count_bases(g: &Multigraph, w: &BTreeSet<usize>, limit: usize) -> Result<BigUint> {
    count_bases_with(g, w, limit, ClassMethod::Orientations)
}

pub fn count_bases_with(
    g: &Multigraph,
    w: &BTreeSet<usize>,
    limit: usize,
    method: ClassMethod,
) -> Result<BigUint> {
    g.check_vertices(w)?;
    let sub = g.induced_subgraph(&g.complement(w));
    let vectors: Vec<Vec<usize>> = match method {
        ClassMethod::Orientations => enumerate_classes(&sub, limit)?
            .into_iter()
            .map(|c| c.vector)
            .collect(),
        ClassMethod::Feasibility => feasible_classes(&sub)?,
    };
    let mut total = BigUint::zero();
    for a in &vectors {
        total += class_weight(g, sub.vertices(), a)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub a: Vec<usize>,
    pub mult: u64,
    #[serde(serialize_with = "as_decimal")]
    pub weight: BigUint,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_as_decimal")]
    pub alt_weight: Option<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableTotals {
    pub orientations: u64,
    pub classes: usize,
    #[serde(serialize_with = "as_decimal")]
    pub bases: BigUint,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_as_decimal")]
    pub alt_bases: Option<BigUint>,
}

/// One row per out-degree class of `G[V \ W]` with its multiplicity, its
/// weight under the degrees of `G`, and optionally under the degrees of a
/// second graph containing the same kept vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    #[serde(skip)]
    pub keep: Vec<usize>,
    pub classes: Vec<TableRow>,
    pub totals: TableTotals,
}

fn as_decimal<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn opt_as_decimal<S: serde::Serializer>(
    n: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

pub fn table_report(
    g: &Multigraph,
    w: &BTreeSet<usize>,
    alt_full: Option<&Multigraph>,
    limit: usize,
) -> Result<TableReport> {
    g.check_vertices(w)?;
    let sub = g.induced_subgraph(&g.complement(w));
    let keep = sub.vertices().to_vec();
    if let Some(alt) = alt_full {
        alt.check_vertices(&keep)?;
    }
    let classes = enumerate_classes(&sub, limit)?;
    let mut rows = Vec::with_capacity(classes.len());
    let mut bases = BigUint::zero();
    let mut alt_bases = alt_full.map(|_| BigUint::zero());
    let mut orientations = 0u64;
    for c in classes {
        let weight = class_weight(g, &keep, &c.vector)?;
        let alt_weight = match alt_full {
            Some(alt) => Some(class_weight(alt, &keep, &c.vector)?),
            None => None,
        };
        bases += &weight;
        if let (Some(sum), Some(x)) = (alt_bases.as_mut(), alt_weight.as_ref()) {
            *sum += x;
        }
        orientations += c.multiplicity;
        rows.push(TableRow {
            a: c.vector,
            mult: c.multiplicity,
            weight,
            alt_weight,
        });
    }
    Ok(TableReport {
        keep,
        totals: TableTotals {
            orientations,
            classes: rows.len(),
            bases,
            alt_bases,
        },
        classes: rows,
    })
}

pub fn format_vector(a: &[usize]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl TableReport {
    /// Aligned plain-text rendering: a header, one line per class, a totals
    /// line.
    pub fn to_text(&self) -> String {
        let has_alt = self.totals.alt_bases.is_some();
        let mut cells: Vec<Vec<String>> = vec![{
            let mut h = vec!["a".to_string(), "|a|".to_string(), "weight".to_string()];
            if has_alt {
                h.push("alt_weight".to_string());
            }
            h
        }];
        for r in &self.classes {
            let mut row = vec![format_vector(&r.a), r.mult.to_string(), r.weight.to_string()];
            if let Some(x) = &r.alt_weight {
                row.push(x.to_string());
            }
            cells.push(row);
        }
        let mut total = vec![
            "total".to_string(),
            self.totals.orientations.to_string(),
            self.totals.bases.to_string(),
        ];
        if let Some(x) = &self.totals.alt_bases {
            total.push(x.to_string());
        }
        cells.push(total);

        let cols = cells[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let mut line = format!("{:<w$}", row[0], w = widths[0]);
            for c in 1..cols {
                let _ = write!(line, "  {:>w$}", row[c], w = widths[c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let _ = writeln!(out, "classes: {}", self.totals.classes);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn lookup(classes: &[OutDegreeClass], a: &[usize]) -> Option<u64> {
        classes.iter().find(|c| c.vector == a).map(|c| c.multiplicity)
    }

    #[test]
    fn k4_classes() {
        let classes = enumerate_classes(&Multigraph::complete(4), 24).unwrap();
        assert_eq!(classes.len(), 38);
        assert_eq!(lookup(&classes, &[0, 1, 2, 3]), Some(1));
        assert_eq!(lookup(&classes, &[1, 1, 2, 2]), Some(4));
        assert_eq!(classes.iter().map(|c| c.multiplicity).sum::<u64>(), 64);
        assert!(classes.windows(2).all(|w| w[0].vector < w[1].vector));
    }

    #[test]
    fn k2_and_k3_classes() {
        let classes = enumerate_classes(&Multigraph::complete(2), 24).unwrap();
        assert_eq!(
            classes,
            vec![
                OutDegreeClass { vector: vec![0, 1], multiplicity: 1 },
                OutDegreeClass { vector: vec![1, 0], multiplicity: 1 },
            ]
        );
        let classes = enumerate_classes(&Multigraph::complete(3), 24).unwrap();
        assert_eq!(classes.len(), 7);
        assert_eq!(lookup(&classes, &[1, 1, 1]), Some(2));
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert_eq!(lookup(&classes, &p), Some(1));
        }
    }

    #[test]
    fn chunked_enumeration_matches_single_pass() {
        // 17 non-loop edges forces two chunks
        let mut pairs = vec![];
        for u in 1..=5 {
            for w in u + 1..=5 {
                pairs.push((u, w));
            }
        }
        pairs.extend([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (1, 4), (2, 2)]);
        let g = Multigraph::from_pairs(5, &pairs).unwrap();
        let classes = enumerate_classes(&g, 24).unwrap();
        assert_eq!(classes.iter().map(|c| c.multiplicity).sum::<u64>(), 1 << 17);
        let mut direct: HashMap<Vec<usize>, u64> = HashMap::new();
        for o in g.all_orientations(24).unwrap() {
            *direct.entry(o.out_degrees(&g)).or_default() += 1;
        }
        assert_eq!(direct.len(), classes.len());
        for c in &classes {
            assert_eq!(direct[&c.vector], c.multiplicity);
        }
    }

    #[test]
    fn class_limit() {
        assert!(matches!(
            enumerate_classes(&Multigraph::complete(8), 24),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn weights() {
        let k4 = Multigraph::complete(4);
        assert_eq!(class_weight(&k4, &[1, 2, 3, 4], &[0, 1, 2, 3]).unwrap(), BigUint::from(9u32));
        let k6 = Multigraph::complete(6);
        assert_eq!(class_weight(&k6, &[1, 2, 3, 4], &[0, 1, 2, 3]).unwrap(), BigUint::from(500u32));
        assert_eq!(class_weight(&k6, &[], &[]).unwrap(), BigUint::one());
        let edgeless = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(class_weight(&edgeless, &[1, 2, 3], &[0, 0, 0]).unwrap(), BigUint::one());
        assert_eq!(class_weight(&k4, &[1], &[4]).unwrap(), BigUint::zero());
    }

    #[test]
    fn basis_counts() {
        let k4 = Multigraph::complete(4);
        assert_eq!(count_bases(&k4, &set(&[]), 24).unwrap(), BigUint::from(918u32));
        let k6 = Multigraph::complete(6);
        assert_eq!(count_bases(&k6, &set(&[5, 6]), 24).unwrap(), BigUint::from(36000u32));
        let k3 = Multigraph::complete(3);
        assert_eq!(count_bases(&k3, &set(&[]), 24).unwrap(), BigUint::from(20u32));
        assert_eq!(count_bases(&k4, &set(&[9]), 24), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn feasibility_matches_orientations() {
        for g in [
            Multigraph::complete(4),
            Multigraph::complete(5),
            Multigraph::parse("3 5\n1 1\n1 2\n1 2\n2 3\n3 3").unwrap(),
            Multigraph::new(2, vec![]).unwrap(),
        ] {
            let walked: Vec<Vec<usize>> = enumerate_classes(&g, 24)
                .unwrap()
                .into_iter()
                .map(|c| c.vector)
                .collect();
            assert_eq!(feasible_classes(&g).unwrap(), walked);
        }
        let k6 = Multigraph::complete(6);
        assert_eq!(
            count_bases_with(&k6, &set(&[]), 24, ClassMethod::Feasibility).unwrap(),
            count_bases(&k6, &set(&[]), 24).unwrap()
        );
    }

    #[test]
    fn small_tables() {
        let t = table_report(&Multigraph::complete(2), &set(&[]), None, 24).unwrap();
        assert_eq!(t.classes.len(), 2);
        assert_eq!(t.totals.bases, BigUint::from(2u32));
        assert_eq!(t.totals.orientations, 2);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"classes":[{"a":[0,1],"mult":1,"weight":"1"},{"a":[1,0],"mult":1,"weight":"1"}],"totals":{"orientations":2,"classes":2,"bases":"2"}}"#
        );
        assert_eq!(
            t.to_text(),
            "a      |a|  weight\n(0,1)    1       1\n(1,0)    1       1\ntotal    2       2\nclasses: 2\n"
        );
    }

    #[test]
    fn table_with_alt_graph() {
        let t = table_report(
            &Multigraph::complete(4),
            &set(&[]),
            Some(&Multigraph::complete(6)),
            24,
        )
        .unwrap();
        assert_eq!(t.totals.orientations, 64);
        assert_eq!(t.totals.bases, BigUint::from(918u32));
        assert_eq!(t.totals.alt_bases, Some(BigUint::from(36000u32)));
        assert!(table_report(&Multigraph::complete(6), &set(&[]), Some(&Multigraph::complete(4)), 24).is_err());
    }
}
