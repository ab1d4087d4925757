//! Graded, weight-refined dimension profiles and the span-closure engine.
//!
//! The engine starts from the highest tensor of a symmetric product of
//! fundamental modules and repeatedly applies a fixed family of lowering
//! operators, round by round. Round `m` adjoins the images of the vectors
//! first reached in round `m - 1`; the number of linearly independent
//! vectors gained in round `m` at torus weight `ν` is exactly the dimension
//! of the `(m, ν)` slice of the filtration being built. Everything produced
//! is weight-homogeneous, so the ambient space splits into independent
//! weight buckets; each bucket keeps its own echelon span, which keeps the
//! elimination local and small.
//!
//! With the degenerate action every round-`m` vector is also homogeneous of
//! grading `m`, so the closure is grade-synchronous by construction. With
//! the classical action rounds count filtration levels instead.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::linalg::{rat, EchelonSpan, Rational, SparseVector};
use crate::wedge::{for_each_term, ActionMode, FactorShape, TensorIndex};
use crate::weyl::{RootIndex, WeightVector};

/// Dimension table refined by `(grading, torus weight)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedProfile {
    cells: BTreeMap<(u32, WeightVector), u64>,
    total: u64,
}

impl GradedProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn bump(&mut self, grade: u32, weight: WeightVector, count: u64) {
        if count == 0 {
            return;
        }
        *self.cells.entry((grade, weight)).or_insert(0) += count;
        self.total += count;
    }

    /// Rebuilds a profile from cells, e.g. when loaded from a cache.
    pub fn from_cells<I: IntoIterator<Item = ((u32, WeightVector), u64)>>(cells: I) -> Self {
        let mut out = Self::new();
        for ((grade, weight), count) in cells {
            out.bump(grade, weight, count);
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(u32, WeightVector), &u64)> {
        self.cells.iter()
    }

    pub fn cell(&self, grade: u32, weight: &WeightVector) -> u64 {
        self.cells
            .get(&(grade, weight.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Marginal over weights: grading -> dimension.
    pub fn by_grade(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (&(grade, _), &count) in &self.cells {
            *out.entry(grade).or_insert(0) += count;
        }
        out
    }

    /// Marginal over gradings: weight -> dimension.
    pub fn by_weight(&self) -> BTreeMap<WeightVector, u64> {
        let mut out = BTreeMap::new();
        for ((_, weight), &count) in &self.cells {
            *out.entry(weight.clone()).or_insert(0) += count;
        }
        out
    }

    pub fn max_grade(&self) -> u32 {
        self.cells.keys().map(|&(g, _)| g).max().unwrap_or(0)
    }
}

/// Assigns dense ids to the basis tensors actually reached by a closure,
/// in first-reached order. The reachable set is usually far smaller than
/// the ambient basis, which is never materialized.
pub(crate) struct Interner {
    ids: BTreeMap<TensorIndex, u32>,
    rev: Vec<TensorIndex>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            ids: BTreeMap::new(),
            rev: Vec::new(),
        }
    }

    fn intern(&mut self, t: TensorIndex) -> u32 {
        if let Some(&id) = self.ids.get(&t) {
            return id;
        }
        let id = self.rev.len() as u32;
        self.ids.insert(t.clone(), id);
        self.rev.push(t);
        id
    }

    fn resolve(&self, id: u32) -> &TensorIndex {
        &self.rev[id as usize]
    }

    fn len(&self) -> usize {
        self.rev.len()
    }
}

/// Round-by-round span closure of the highest tensor under the given
/// lowering operators. Returns the `(round, weight)` dimension profile.
///
/// Generators are applied in the order given; the caller fixes that order
/// once so that results are reproducible run to run. Candidates within a
/// round are processed in insertion order of their source vectors, which
/// makes the interner ids, pivot choices and the final profile fully
/// deterministic.
pub fn span_closure(
    n: u8,
    shape: &FactorShape,
    roots: &[RootIndex],
    mode: ActionMode,
) -> GradedProfile {
    let mut interner = Interner::new();
    let mut buckets: BTreeMap<WeightVector, EchelonSpan<u32>> = BTreeMap::new();
    let mut profile = GradedProfile::new();

    let t0 = TensorIndex::highest(shape);
    let w0 = t0.torus_weight(n);
    let id0 = interner.intern(t0);
    let v0: SparseVector<u32> = SparseVector::unit(id0);
    buckets.entry(w0.clone()).or_default().insert(v0.clone());
    profile.bump(0, w0.clone(), 1);

    let mut frontier: Vec<(SparseVector<u32>, WeightVector)> = alloc::vec![(v0, w0)];
    let mut round = 1u32;
    while !frontier.is_empty() {
        let mut next: Vec<(SparseVector<u32>, WeightVector)> = Vec::new();
        for (v, wt) in &frontier {
            for &r in roots {
                // image of v under the operator r, collected term by term
                let mut raw: Vec<(Rational, TensorIndex)> = Vec::new();
                for (&id, c) in v.iter() {
                    let t = interner.resolve(id);
                    for_each_term(mode, r, t, |sign, out| {
                        raw.push((c * rat(sign as i64), out));
                    });
                }
                if raw.is_empty() {
                    continue;
                }
                let u =
                    SparseVector::from_terms(raw.into_iter().map(|(c, t)| (interner.intern(t), c)));
                if u.is_zero() {
                    continue;
                }
                let shifted = wt.shifted(r.i, r.j);
                let span = buckets.entry(shifted.clone()).or_default();
                let residual = span.reduce(u);
                if residual.is_zero() {
                    continue;
                }
                let row = residual.into_monic();
                span.insert_reduced(row.clone());
                profile.bump(round, shifted.clone(), 1);
                next.push((row, shifted));
            }
        }
        frontier = next;
        round += 1;
    }

    debug_assert!(interner.len() as u128 <= shape.ambient_dim(n));
    profile
}
