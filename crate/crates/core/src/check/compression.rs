//! Multiset compressions of hypergraphs and the induced volume-sum ordering:
//! an elementary compression replaces two non-nested sets by their
//! intersection and union (dropping an empty intersection), and supermodular
//! set functions only grow along compression chains.

use std::collections::{BTreeSet, VecDeque};

use crate::body::Body;
use crate::error::{GeometryError, Result};
use crate::report::InequalityReport;
use crate::scalar::Scalar;

use super::supermod::SetFunction;

/// A multiset of nonempty subsets of the ground set, kept sorted for
/// canonical comparisons.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Multiset(Vec<BTreeSet<usize>>);

impl Multiset {
    pub fn new(sets: Vec<BTreeSet<usize>>) -> Result<Self> {
        if sets.iter().any(|s| s.is_empty()) {
            return Err(GeometryError::InvalidParam(
                "multiset members must be nonempty".into(),
            ));
        }
        let mut sets = sets;
        sets.sort();
        Ok(Multiset(sets))
    }

    pub fn from_slices(sets: &[&[usize]]) -> Result<Self> {
        Self::new(sets.iter().map(|s| s.iter().copied().collect()).collect())
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.0
    }

    /// `Σ |s|²`, strictly increasing under elementary compression.
    pub fn square_weight(&self) -> usize {
        self.0.iter().map(|s| s.len() * s.len()).sum()
    }

    fn compress_pair(&self, i: usize, j: usize) -> Option<Multiset> {
        let (a, b) = (&self.0[i], &self.0[j]);
        let nested = a.is_subset(b) || b.is_subset(a);
        if nested {
            return None;
        }
        let inter: BTreeSet<usize> = a.intersection(b).copied().collect();
        let union: BTreeSet<usize> = a.union(b).copied().collect();
        let mut sets: Vec<BTreeSet<usize>> = self
            .0
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && *k != j)
            .map(|(_, s)| s.clone())
            .collect();
        if !inter.is_empty() {
            sets.push(inter);
        }
        sets.push(union);
        sets.sort();
        Some(Multiset(sets))
    }

    /// All elementary compressions.
    fn neighbours(&self) -> Vec<Multiset> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if let Some(m) = self.compress_pair(i, j) {
                    out.push(m);
                }
            }
        }
        out
    }
}

/// The unique minimal multiset dominated by `a`, by its closed form:
/// `s#_j = { i : i lies in at least j of the sets }`.
pub fn minimal_multiset(a: &Multiset) -> Multiset {
    let count = |i: usize| a.sets().iter().filter(|s| s.contains(&i)).count();
    let ground: BTreeSet<usize> = a.sets().iter().flatten().copied().collect();
    let max_mult = ground.iter().map(|&i| count(i)).max().unwrap_or(0);
    let mut sets = Vec::new();
    for j in 1..=max_mult {
        let s: BTreeSet<usize> = ground.iter().copied().filter(|&i| count(i) >= j).collect();
        if !s.is_empty() {
            sets.push(s);
        }
    }
    Multiset::new(sets).expect("minimal multiset of a valid multiset")
}

/// Deterministic compression chain: repeatedly compress the
/// lexicographically smallest non-nested index pair until no move remains.
pub fn compress_to_fixpoint(a: &Multiset) -> Multiset {
    let mut cur = a.clone();
    'outer: loop {
        for i in 0..cur.sets().len() {
            for j in i + 1..cur.sets().len() {
                if let Some(next) = cur.compress_pair(i, j) {
                    debug_assert!(next.square_weight() > cur.square_weight());
                    cur = next;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Is `b` reachable from `a` by elementary compressions? BFS over the
/// compression order (desk-scale multisets only).
pub fn is_compression_of(b: &Multiset, a: &Multiset) -> bool {
    if a == b {
        return true;
    }
    let target_weight = b.square_weight();
    let mut seen: BTreeSet<Multiset> = BTreeSet::new();
    let mut queue: VecDeque<Multiset> = VecDeque::new();
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        for next in cur.neighbours() {
            if &next == b {
                return true;
            }
            if next.square_weight() < target_weight && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// `Σ_{s∈a} F(s) <= Σ_{t∈b} F(t)` for `b` a compression of `a` and `F` the
/// volume set function (or its mixed-volume generalization).
pub fn check_compression(f: &SetFunction, a: &Multiset, b: &Multiset) -> Result<InequalityReport> {
    let k = f.ground_size();
    for s in a.sets().iter().chain(b.sets()) {
        if let Some(&bad) = s.iter().find(|&&i| i >= k) {
            return Err(GeometryError::IndexOutOfRange(format!(
                "set element {bad} out of ground range {k}"
            )));
        }
    }
    if !is_compression_of(b, a) {
        return Err(GeometryError::NotACompression);
    }
    let mut lhs = Scalar::zero();
    for s in a.sets() {
        lhs = &lhs + &f.eval(s)?;
    }
    let mut rhs = Scalar::zero();
    for t in b.sets() {
        rhs = &rhs + &f.eval(t)?;
    }
    let bodies = match f {
        SetFunction::Volume { bodies } => bodies.clone(),
        SetFunction::MixedWithFixed { bodies, .. } => bodies.clone(),
    };
    Ok(InequalityReport::check(
        "compression",
        f.dim(),
        bodies.into_iter().map(Body::Vpolytope).collect(),
        lhs,
        rhs,
        Scalar::one(),
    ))
}
