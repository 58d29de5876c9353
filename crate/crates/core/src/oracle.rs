//! Brute-force ground truth.
//!
//! Everything here works from explicit subset sweeps and a plain
//! element-to-set matching, never from the labeling solver or the census, so
//! agreement with those routes carries evidence.

use std::collections::{BTreeSet, HashSet};
use std::fmt::{self, Debug, Display};
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::count_bases;
use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};
use crate::matroid::{GroundElement, MatroidHandle};

/// Largest ground set [`SetSystem::enumerate_bases`] sweeps.
pub const BASIS_GROUND_LIMIT: usize = 20;
/// Largest rank [`SetSystem::enumerate_bases`] sweeps.
pub const BASIS_RANK_LIMIT: usize = 10;
/// Largest ground set [`check_rank_axioms`] sweeps.
pub const AXIOM_GROUND_LIMIT: usize = 10;

/// A finite family of subsets of a ground set; the same subset may appear
/// more than once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem<T> {
    ground: Vec<T>,
    family: Vec<Vec<usize>>,
    /// For each ground index, the family members containing it.
    member_of: Vec<Vec<usize>>,
}

impl<T: Ord + Clone + Debug> SetSystem<T> {
    pub fn new(ground: Vec<T>, family: Vec<Vec<T>>) -> Result<Self> {
        let mut ground = ground;
        ground.sort();
        ground.dedup();
        let mut member_of = vec![Vec::new(); ground.len()];
        let mut indexed = Vec::with_capacity(family.len());
        for (j, set) in family.into_iter().enumerate() {
            let mut idx = Vec::with_capacity(set.len());
            for x in set {
                let i = ground
                    .binary_search(&x)
                    .map_err(|_| Error::NotInGround(format!("{x:?}")))?;
                idx.push(i);
            }
            idx.sort_unstable();
            idx.dedup();
            for &i in &idx {
                member_of[i].push(j);
            }
            indexed.push(idx);
        }
        Ok(SetSystem {
            ground,
            family: indexed,
            member_of,
        })
    }

    pub fn ground(&self) -> &[T] {
        &self.ground
    }

    pub fn family_len(&self) -> usize {
        self.family.len()
    }

    /// Same family, members listed in a different order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let family = order
            .iter()
            .map(|&j| self.family[j].iter().map(|&i| self.ground[i].clone()).collect())
            .collect();
        SetSystem::new(self.ground.clone(), family).expect("same ground")
    }

    fn indices(&self, x: &[T]) -> Option<Vec<usize>> {
        let mut idx: Vec<usize> = x
            .iter()
            .map(|e| self.ground.binary_search(e).ok())
            .collect::<Option<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        Some(idx)
    }

    /// Size of a maximum matching of the given elements into distinct
    /// family members.
    fn matching_size(&self, elems: &[usize]) -> usize {
        let mut owner: Vec<Option<usize>> = vec![None; self.family.len()];
        let mut matched = 0;
        for &x in elems {
            let mut seen = vec![false; self.family.len()];
            if self.try_match(x, &mut owner, &mut seen) {
                matched += 1;
            }
        }
        matched
    }

    fn try_match(&self, x: usize, owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &j in &self.member_of[x] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || self.try_match(owner[j].unwrap(), owner, seen) {
                owner[j] = Some(x);
                return true;
            }
        }
        false
    }

    /// Whether the elements of `x` can be matched to distinct members of the
    /// family, each element lying in its member. Elements outside the ground
    /// set make the answer false.
    pub fn is_partial_transversal(&self, x: &[T]) -> bool {
        match self.indices(x) {
            Some(idx) => idx.len() <= self.family.len() && self.matching_size(&idx) == idx.len(),
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.ground.len()).collect();
        self.matching_size(&all)
    }

    /// All maximum partial transversals, in lexicographic order of ground
    /// positions.
    pub fn enumerate_bases(&self) -> Result<Vec<Vec<T>>> {
        if self.ground.len() > BASIS_GROUND_LIMIT {
            return Err(Error::limit("basis enumeration ground set", self.ground.len(), BASIS_GROUND_LIMIT));
        }
        let r = self.rank();
        if r > BASIS_RANK_LIMIT {
            return Err(Error::limit("basis enumeration rank", r, BASIS_RANK_LIMIT));
        }
        Ok((0..self.ground.len())
            .combinations(r)
            .filter(|c| self.matching_size(c) == r)
            .map(|c| c.into_iter().map(|i| self.ground[i].clone()).collect())
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.instance
        )?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Self {
        Timer(Instant::now())
    }

    fn verdict(
        &self,
        check: &str,
        instance: &str,
        witness: Option<String>,
        detail: Option<String>,
    ) -> Verdict {
        Verdict {
            check: check.to_string(),
            instance: instance.to_string(),
            pass: witness.is_none(),
            witness,
            detail,
            elapsed_ms: self.0.elapsed().as_millis() as u64,
        }
    }
}

fn show<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", xs.into_iter().map(|x| x.to_string()).join(","))
}

/// Sweeps every subset (and every pair of subsets) of `ground` for the rank
/// axioms: `r(empty) = 0`, `0 <= r(X) <= |X|`, monotonicity and
/// submodularity. Reports the first violation.
pub fn check_rank_axioms<T, F>(rank_fn: F, ground: &[T], instance: &str) -> Result<Verdict>
where
    T: Clone + Display,
    F: Fn(&[T]) -> usize,
{
    let n = ground.len();
    if n > AXIOM_GROUND_LIMIT {
        return Err(Error::limit("rank axiom sweep", n, AXIOM_GROUND_LIMIT));
    }
    let timer = Timer::start();
    let subset = |mask: usize| -> Vec<T> {
        (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ground[i].clone()).collect()
    };
    let table: Vec<usize> = (0..1usize << n).map(|m| rank_fn(&subset(m))).collect();
    let name = |mask: usize| show(subset(mask));

    let witness = (|| {
        if table[0] != 0 {
            return Some(format!("r({{}}) = {}", table[0]));
        }
        for (x, &r) in table.iter().enumerate() {
            if r > x.count_ones() as usize {
                return Some(format!("r({}) = {} exceeds its size", name(x), r));
            }
        }
        for y in 0..table.len() {
            // every proper subset x of y
            let mut x = y;
            while x > 0 {
                x = (x - 1) & y;
                if table[x] > table[y] {
                    return Some(format!("r({}) > r({})", name(x), name(y)));
                }
            }
        }
        for x in 0..table.len() {
            for y in x + 1..table.len() {
                if table[x | y] + table[x & y] > table[x] + table[y] {
                    return Some(format!("submodularity fails for X={} Y={}", name(x), name(y)));
                }
            }
        }
        None
    })();
    Ok(timer.verdict(
        "rank-axioms",
        instance,
        witness,
        Some(format!("{} subsets", table.len())),
    ))
}

/// For every ordered pair of bases and every `x` in the first but not the
/// second, some `y` in the second but not the first must give a basis
/// `B1 - x + y`.
pub fn check_basis_exchange<T>(bases: &[Vec<T>], instance: &str) -> Result<Verdict>
where
    T: Ord + Clone + Display,
{
    if bases.is_empty() {
        return Err(Error::EmptyBasisList);
    }
    let timer = Timer::start();
    let universe: Vec<T> = bases.iter().flatten().cloned().sorted().dedup().collect();
    if universe.len() > 128 {
        return Err(Error::limit("basis exchange universe", universe.len(), 128));
    }
    let mask_of = |b: &[T]| -> u128 {
        b.iter()
            .map(|x| 1u128 << universe.binary_search(x).expect("collected above"))
            .fold(0, |a, bit| a | bit)
    };
    let name = |mask: u128| show((0..universe.len()).filter(|i| mask >> i & 1 == 1).map(|i| &universe[i]));
    let masks: Vec<u128> = bases.iter().map(|b| mask_of(b)).collect();
    let lookup: HashSet<u128> = masks.iter().copied().collect();
    let size = masks[0].count_ones();
    let mut witness = masks
        .iter()
        .find(|b| b.count_ones() != size)
        .map(|&b| format!("basis {} has size {} not {}", name(b), b.count_ones(), size));
    'outer: for &b1 in &masks {
        if witness.is_some() {
            break;
        }
        for &b2 in &masks {
            let only1 = b1 & !b2;
            let only2 = b2 & !b1;
            for x in (0..universe.len()).filter(|i| only1 >> i & 1 == 1) {
                let found = (0..universe.len())
                    .filter(|j| only2 >> j & 1 == 1)
                    .any(|y| lookup.contains(&(b1 & !(1 << x) | 1 << y)));
                if !found {
                    witness = Some(format!(
                        "B1={} B2={} x={} has no exchange partner",
                        name(b1),
                        name(b2),
                        universe[x]
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(timer.verdict(
        "basis-exchange",
        instance,
        witness,
        Some(format!("{} bases", masks.len())),
    ))
}

fn as_mask(ground: &[GroundElement], b: &[GroundElement]) -> u32 {
    b.iter()
        .map(|x| 1u32 << ground.binary_search(x).expect("element of ground"))
        .fold(0, |a, bit| a | bit)
}

fn from_mask(ground: &[GroundElement], mask: u32) -> Vec<GroundElement> {
    (0..ground.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| ground[i])
        .collect()
}

/// Every basis of `m`, found by sweeping subsets of the basis size (or of
/// its complement size, whichever is smaller) through the rank function of
/// `m`. Returned as bitmasks over `m.ground()`.
pub fn tm_bases_by_rank(m: &MatroidHandle) -> Result<Vec<u32>> {
    let ground = m.ground();
    let n = ground.len();
    if n > BASIS_GROUND_LIMIT {
        return Err(Error::limit("basis enumeration ground set", n, BASIS_GROUND_LIMIT));
    }
    let r = m.rank_of_ground();
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut out = Vec::new();
    if r <= n - r {
        for c in (0..n).combinations(r) {
            let b: Vec<GroundElement> = c.iter().map(|&i| ground[i]).collect();
            if m.rank(&b)? == r {
                out.push(as_mask(ground, &b));
            }
        }
    } else {
        for c in (0..n).combinations(n - r) {
            let y: u32 = c.iter().fold(0, |a, &i| a | 1 << i);
            let b = from_mask(ground, full & !y);
            if m.rank(&b)? == r {
                out.push(full & !y);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The central consistency check for `TM(g, w)`:
/// the census count, the number of bases of the dual presentation, and the
/// number of bases found through the rank function must coincide, and the
/// complements of the dual bases must be exactly the bases. When `w` is
/// empty the basis family must also be closed under complement.
pub fn cross_validate(g: &Multigraph, w: &BTreeSet<usize>, limit: usize) -> Result<Verdict> {
    let timer = Timer::start();
    let instance = instance_name(g, w);
    let m = MatroidHandle::with_deleted(g.clone(), w)?;
    let ground = m.ground().to_vec();
    let n = ground.len();
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };

    let formula = count_bases(g, w, limit)?;
    let dual = m.dual_presentation().to_set_system();
    let dual_bases = dual.enumerate_bases()?;
    let tm_bases = tm_bases_by_rank(&m)?;

    let detail = format!(
        "formula={} dual-presentation={} rank-sweep={}",
        formula,
        dual_bases.len(),
        tm_bases.len()
    );
    let mut witness = None;
    if formula != BigUint::from(dual_bases.len()) || formula != BigUint::from(tm_bases.len()) {
        witness = Some(format!("counts disagree: {detail}"));
    }

    if witness.is_none() {
        let primal: HashSet<u32> = tm_bases.iter().copied().collect();
        let mut complements: Vec<u32> = dual_bases
            .iter()
            .map(|b| full & !as_mask(&ground, b))
            .collect();
        complements.sort_unstable();
        if let Some(&bad) = complements.iter().find(|c| !primal.contains(c)) {
            witness = Some(format!(
                "complement {} of a dual basis is not a basis",
                show(from_mask(&ground, bad))
            ));
        }
    }

    if witness.is_none() && w.is_empty() {
        let primal: HashSet<u32> = tm_bases.iter().copied().collect();
        if let Some(&b) = tm_bases.iter().find(|&&b| !primal.contains(&(full & !b))) {
            witness = Some(format!(
                "basis {} has a complement that is not a basis",
                show(from_mask(&ground, b))
            ));
        }
    }
    Ok(timer.verdict("cross-validate", &instance, witness, Some(detail)))
}

pub fn instance_name(g: &Multigraph, w: &BTreeSet<usize>) -> String {
    format!(
        "n={} m={} W={}",
        g.vertex_count(),
        g.edge_count(),
        show(w.iter())
    )
}

/// A graph, a deleted vertex set, and a label for reports.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub name: String,
    pub graph: Multigraph,
    pub w: BTreeSet<usize>,
}

/// The named graphs of the verification corpus, before choosing `W`.
pub fn corpus_graphs() -> Vec<(String, Multigraph)> {
    let named = |name: &str, n: usize, pairs: &[(usize, usize)]| {
        (name.to_string(), Multigraph::from_pairs(n, pairs).unwrap())
    };
    let mut graphs = vec![
        named("K1", 1, &[]),
        named("K2", 2, &[(1, 2)]),
        named("P3", 3, &[(1, 2), (2, 3)]),
        named("K3", 3, &[(1, 2), (1, 3), (2, 3)]),
        named("P4", 4, &[(1, 2), (2, 3), (3, 4)]),
        named("star4", 4, &[(1, 2), (1, 3), (1, 4)]),
        named("C4", 4, &[(1, 2), (2, 3), (3, 4), (4, 1)]),
        named("paw", 4, &[(1, 2), (1, 3), (2, 3), (3, 4)]),
        named("diamond", 4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
        named("K4", 4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        named("K2-double", 2, &[(1, 2), (1, 2)]),
        named("loop", 1, &[(1, 1)]),
        named("double-loop", 1, &[(1, 1), (1, 1)]),
        named("K3+pendant", 4, &[(1, 2), (1, 3), (2, 3), (1, 4)]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667);
    for k in 0..6 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=6);
        let edges = (0..m)
            .map(|_| Edge::new(rng.gen_range(1..=n), rng.gen_range(1..=n)))
            .collect();
        graphs.push((format!("random{k}"), Multigraph::new(n, edges).unwrap()));
    }
    graphs
}

/// Every corpus graph with every deleted set of size at most two, plus
/// `K6` with `W = {5, 6}`.
pub fn corpus() -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for (name, g) in corpus_graphs() {
        let vs = g.vertices().to_vec();
        for size in 0..=2.min(vs.len()) {
            for w in vs.iter().copied().combinations(size) {
                let w: BTreeSet<usize> = w.into_iter().collect();
                out.push(CorpusInstance {
                    name: format!("{name} W={}", show(w.iter())),
                    graph: g.clone(),
                    w,
                });
            }
        }
    }
    out.push(CorpusInstance {
        name: "K6 W={5,6}".to_string(),
        graph: Multigraph::complete(6),
        w: [5, 6].into_iter().collect(),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_ENUMERATION_LIMIT;
    use crate::matroid::GroundElement as El;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn k2() -> Multigraph {
        Multigraph::complete(2)
    }

    #[test]
    fn partial_transversal_basics() {
        let sys = SetSystem::new(vec!['a'], vec![vec!['a'], vec!['a']]).unwrap();
        assert!(sys.is_partial_transversal(&[]));
        assert!(sys.is_partial_transversal(&['a']));
        assert_eq!(sys.rank(), 1);
        assert!(!sys.is_partial_transversal(&['z']));

        let p = MatroidHandle::new(k2()).primal_presentation().to_set_system();
        assert!(!p.is_partial_transversal(&[El::new(1, 1), El::new(2, 1)]));
        assert!(p.is_partial_transversal(&[El::new(2, 1)]));
    }

    #[test]
    fn k2_bases() {
        let p = MatroidHandle::new(k2()).primal_presentation().to_set_system();
        assert_eq!(
            p.enumerate_bases().unwrap(),
            vec![vec![El::new(1, 1)], vec![El::new(2, 1)]]
        );
    }

    #[test]
    fn k4_bases() {
        let p = MatroidHandle::new(Multigraph::complete(4)).primal_presentation().to_set_system();
        assert_eq!((0..12).combinations(6).count(), 924);
        assert_eq!(p.enumerate_bases().unwrap().len(), 918);
    }

    #[test]
    fn basis_limits() {
        let p = MatroidHandle::new(Multigraph::complete(6)).primal_presentation().to_set_system();
        assert!(matches!(p.enumerate_bases(), Err(Error::LimitExceeded { .. })));
        let deleted = MatroidHandle::with_deleted(Multigraph::complete(5), &set(&[1]))
            .unwrap()
            .primal_presentation()
            .to_set_system();
        // ground 16, rank 10
        assert_eq!(deleted.rank(), 10);
        let big = MatroidHandle::new(Multigraph::from_pairs(6, &[(1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (3, 4), (3, 4), (3, 4), (5, 6), (5, 6)]).unwrap())
            .primal_presentation()
            .to_set_system();
        assert!(matches!(big.enumerate_bases(), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn rank_axioms_small() {
        for text in ["2 1\n1 2", "1 1\n1 1", "3 3\n1 2\n1 3\n2 3"] {
            let m = MatroidHandle::new(Multigraph::parse(text).unwrap());
            let v = check_rank_axioms(|x| m.rank(x).unwrap(), m.ground(), text).unwrap();
            assert!(v.pass, "{v}");
        }
        let lp = MatroidHandle::new(Multigraph::parse("1 1\n1 1").unwrap());
        let g = lp.ground();
        assert_eq!(
            [&g[..0], &g[..1], &g[1..], g].map(|x| lp.rank(x).unwrap()),
            [0, 1, 1, 1]
        );
    }

    #[test]
    fn rank_axioms_catch_violations() {
        let ground = vec![1, 2, 3];
        let v = check_rank_axioms(|x: &[i32]| x.len().min(2), &ground, "uniform").unwrap();
        assert!(v.pass, "{v}");
        // not submodular: r = 1 only on {1,2}
        let v = check_rank_axioms(|x: &[i32]| usize::from(x == [1, 2]), &ground, "bad").unwrap();
        assert!(!v.pass);
        let v = check_rank_axioms(|x: &[i32]| x.len() + 1, &ground, "bad").unwrap();
        assert!(!v.pass);
        assert!(check_rank_axioms(|x: &[i32]| x.len(), &(0..11).collect::<Vec<_>>(), "big").is_err());
    }

    #[test]
    fn exchange() {
        let p = MatroidHandle::new(k2()).primal_presentation().to_set_system();
        let bases = p.enumerate_bases().unwrap();
        assert!(check_basis_exchange(&bases, "K2").unwrap().pass);

        let k3 = MatroidHandle::new(Multigraph::complete(3)).primal_presentation().to_set_system();
        let bases = k3.enumerate_bases().unwrap();
        assert_eq!(bases.len(), 20);
        assert!(check_basis_exchange(&bases, "K3").unwrap().pass);
        // all 20 triples are bases, so dropping a single one still leaves a
        // matroid; dropping two at distance two does not
        for i in 0..bases.len() {
            let mut fewer = bases.clone();
            fewer.remove(i);
            assert!(check_basis_exchange(&fewer, "K3 minus one").unwrap().pass);
        }
        let v = check_basis_exchange(&bases[2..], "K3 minus two").unwrap();
        assert!(!v.pass);
        assert!(v.witness.is_some());

        let k4 = MatroidHandle::new(Multigraph::complete(4)).primal_presentation().to_set_system();
        let bases = k4.enumerate_bases().unwrap();
        assert!(!check_basis_exchange(&bases[1..], "K4 minus one").unwrap().pass);

        assert_eq!(check_basis_exchange::<El>(&[], "empty"), Err(Error::EmptyBasisList));
    }

    #[test]
    fn cross_validation_examples() {
        let lim = DEFAULT_ENUMERATION_LIMIT;
        let v = cross_validate(&Multigraph::complete(4), &set(&[]), lim).unwrap();
        assert!(v.pass, "{v}");
        assert_eq!(v.detail.as_deref(), Some("formula=918 dual-presentation=918 rank-sweep=918"));
        let v = cross_validate(&k2(), &set(&[]), lim).unwrap();
        assert_eq!(v.detail.as_deref(), Some("formula=2 dual-presentation=2 rank-sweep=2"));
        let v = cross_validate(&Multigraph::parse("1 1\n1 1").unwrap(), &set(&[]), lim).unwrap();
        assert!(v.pass);
        assert_eq!(v.detail.as_deref(), Some("formula=2 dual-presentation=2 rank-sweep=2"));
    }

    #[test]
    fn permuting_the_family_keeps_bases() {
        let p = MatroidHandle::new(Multigraph::complete(3)).primal_presentation().to_set_system();
        let q = p.permuted(&[2, 0, 1]);
        assert_eq!(p.enumerate_bases().unwrap(), q.enumerate_bases().unwrap());
    }

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert!(c.iter().any(|i| i.name == "K4 W={}"));
        assert!(c.iter().any(|i| i.name == "loop W={1}"));
        // random graphs are reproducible
        assert_eq!(corpus_graphs()[14].1, corpus_graphs()[14].1);
        assert!(c.iter().all(|i| i.graph.edge_count() <= 15));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn system() -> impl Strategy<Value = SetSystem<u8>> {
            prop::collection::vec(prop::collection::vec(0u8..8, 0..4), 0..5)
                .prop_map(|fam| SetSystem::new((0..8).collect(), fam).unwrap())
        }

        proptest! {
            #[test]
            fn subsets_of_partial_transversals_are_partial_transversals(
                sys in system(),
                x in prop::collection::btree_set(0u8..8, 0..6),
                drop in 0usize..6,
            ) {
                let x: Vec<u8> = x.into_iter().collect();
                if sys.is_partial_transversal(&x) && !x.is_empty() {
                    let mut y = x.clone();
                    y.remove(drop % x.len());
                    prop_assert!(sys.is_partial_transversal(&y));
                }
            }

            #[test]
            fn basis_count_ignores_family_order(sys in system(), seed in any::<u64>()) {
                let mut order: Vec<usize> = (0..sys.family_len()).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                use rand::seq::SliceRandom;
                order.shuffle(&mut rng);
                prop_assert_eq!(
                    sys.enumerate_bases().unwrap().len(),
                    sys.permuted(&order).enumerate_bases().unwrap().len()
                );
            }
        }
    }
}
