//! Monomial bases from minimal monomials and Minkowski sums.
//!
//! Monomials in the commuting degenerate lowering operators attached to `w`
//! are compared in a graded lexicographic order: lower total degree first,
//! ties broken along the fixed generator ordering (`i + j` increasing, then
//! `j` increasing), where the monomial containing the first differing
//! generator in the *lesser* degree is the smaller one. For each wedge
//! index in the fundamental basis the minimal monomial reaching it from the
//! highest-weight vector is recorded as an exponent vector; the resulting
//! lattice sets add up, weight coordinate by weight coordinate, into a
//! Minkowski sum whose cardinality bounds the Cartan component dimension
//! from below.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::demazure::fund_basis;
use crate::wedge::{act_degenerate, WedgeIndex};
use crate::weyl::{DominantWeight, Permutation, RootIndex};

/// The inversion set of a permutation in the fixed generator ordering;
/// exponent vectors are aligned to this sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionOrder {
    roots: Vec<RootIndex>,
}

impl InversionOrder {
    pub fn new(w: &Permutation) -> Self {
        let mut roots = w.inversions();
        roots.sort_by_key(|r| r.order_key());
        InversionOrder { roots }
    }

    pub fn roots(&self) -> &[RootIndex] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Graded-lexicographic comparison of two aligned exponent vectors.
    pub fn monomial_cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.exps.len(), self.roots.len());
        debug_assert_eq!(b.exps.len(), self.roots.len());
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in a.exps.iter().zip(b.exps.iter()) {
            match x.cmp(y) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Exponent vector of a monomial in the generators of an
/// [`InversionOrder`], aligned to its root sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector { exps }
    }

    pub fn zero(len: usize) -> Self {
        ExponentVector {
            exps: alloc::vec![0; len],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// The positive entries as `(root, exponent)` pairs.
    pub fn support<'a>(
        &'a self,
        order: &'a InversionOrder,
    ) -> impl Iterator<Item = (RootIndex, u32)> + 'a {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(pos, &e)| (order.roots[pos], e))
    }

    fn sum(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Applies the degenerate monomial with the given exponents to the
/// highest-weight index at level `k`; `None` when any step vanishes.
fn apply_monomial(order: &InversionOrder, exps: &[u32], start: &WedgeIndex) -> Option<WedgeIndex> {
    let mut current = start.clone();
    for (pos, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            let (_sign, next) = act_degenerate(order.roots[pos], &current)?;
            current = next;
        }
    }
    Some(current)
}

/// The minimal monomial (in the graded-lex order) whose degenerate action
/// takes the level-`k` highest-weight vector to a nonzero multiple of the
/// basis vector at `s`. Returns `None` when `s` is not reachable, i.e. not
/// in the fundamental basis for `w`.
///
/// The degree of any such monomial is forced to be the grading of `s`, so
/// the search enumerates exponent vectors of that degree in increasing
/// lexicographic order and returns the first hit.
pub fn minimal_monomial(order: &InversionOrder, s: &WedgeIndex) -> Option<ExponentVector> {
    let degree = s.pbw_degree();
    let start = WedgeIndex::highest(s.level());
    if degree == 0 {
        return if *s == start {
            Some(ExponentVector::zero(order.len()))
        } else {
            None
        };
    }
    let len = order.len();
    let mut exps = alloc::vec![0u32; len];
    fn search(
        order: &InversionOrder,
        target: &WedgeIndex,
        start: &WedgeIndex,
        exps: &mut Vec<u32>,
        pos: usize,
        remaining: u32,
    ) -> bool {
        if pos + 1 == exps.len() {
            exps[pos] = remaining;
            let hit = apply_monomial(order, exps, start).as_ref() == Some(target);
            if !hit {
                exps[pos] = 0;
            }
            return hit;
        }
        for e in 0..=remaining {
            exps[pos] = e;
            if search(order, target, start, exps, pos + 1, remaining - e) {
                return true;
            }
        }
        exps[pos] = 0;
        false
    }
    if len > 0 && search(order, s, &start, &mut exps, 0, degree) {
        Some(ExponentVector::new(exps))
    } else {
        None
    }
}

/// A finite set of exponent vectors over a fixed inversion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSet {
    order: InversionOrder,
    points: BTreeSet<ExponentVector>,
}

impl LatticeSet {
    pub fn order(&self) -> &InversionOrder {
        &self.order
    }

    pub fn points(&self) -> impl Iterator<Item = &ExponentVector> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &ExponentVector) -> bool {
        self.points.contains(point)
    }

    /// Pointwise Minkowski sum, deduplicated.
    pub fn minkowski(&self, other: &LatticeSet) -> LatticeSet {
        debug_assert_eq!(self.order, other.order);
        let mut points = BTreeSet::new();
        for a in &self.points {
            for b in &other.points {
                points.insert(a.sum(b));
            }
        }
        LatticeSet {
            order: self.order.clone(),
            points,
        }
    }
}

/// The set of minimal-monomial exponent vectors over the level-`k`
/// fundamental basis of `w`. Its size equals the fundamental basis size.
pub fn gamma_set(w: &Permutation, k: u8) -> LatticeSet {
    let order = InversionOrder::new(w);
    let mut points = BTreeSet::new();
    for s in fund_basis(w, k) {
        let m =
            minimal_monomial(&order, &s).expect("fundamental basis vectors are always reachable");
        points.insert(m);
    }
    LatticeSet { order, points }
}

/// The iterated Minkowski sum with one summand set per unit of each weight
/// coordinate, deduplicating after every summand. Returns the set together
/// with its cardinality.
pub fn minkowski_count(w: &Permutation, lam: &DominantWeight) -> (LatticeSet, u64) {
    let order = InversionOrder::new(w);
    let mut acc = LatticeSet {
        order: order.clone(),
        points: {
            let mut start = BTreeSet::new();
            start.insert(ExponentVector::zero(order.len()));
            start
        },
    };
    for k in 1..lam.n() {
        if lam.coord(k) == 0 {
            continue;
        }
        let gamma = gamma_set(w, k);
        for _ in 0..lam.coord(k) {
            acc = acc.minkowski(&gamma);
        }
    }
    let count = acc.len() as u64;
    (acc, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn wedge(entries: &[u8]) -> WedgeIndex {
        WedgeIndex::new(entries.to_vec()).unwrap()
    }

    /// Exponent vector with the given roots at exponent 1.
    fn monomial(order: &InversionOrder, roots: &[(u8, u8)]) -> ExponentVector {
        let mut exps = alloc::vec![0u32; order.len()];
        for &(i, j) in roots {
            let pos = order
                .roots()
                .iter()
                .position(|r| r.i == i && r.j == j)
                .expect("root not in the inversion order");
            exps[pos] += 1;
        }
        ExponentVector::new(exps)
    }

    #[test]
    fn generator_ordering_matches_the_fixed_key() {
        let order = InversionOrder::new(&perm("6,4,2,5,3,1"));
        let labels: Vec<(u8, u8)> = order.roots().iter().map(|r| (r.i, r.j)).collect();
        assert_eq!(
            labels,
            alloc::vec![
                (1, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (1, 6),
                (2, 6),
                (4, 5),
                (3, 6),
                (4, 6),
                (5, 6)
            ]
        );
    }

    #[test]
    fn graded_lex_comparison() {
        let w = Permutation::longest(4);
        let order = InversionOrder::new(&w);
        // lower degree always first
        let deg1 = monomial(&order, &[(1, 2)]);
        let deg2 = monomial(&order, &[(1, 2), (1, 3)]);
        assert_eq!(order.monomial_cmp(&deg1, &deg2), Ordering::Less);
        // (1,2) precedes (1,3) in the generator order
        let f12 = monomial(&order, &[(1, 2)]);
        let f13 = monomial(&order, &[(1, 3)]);
        assert_eq!(order.monomial_cmp(&f12, &f13), Ordering::Greater);
        // both (2,3) and (1,4) have i+j = 5; (2,3) precedes by smaller j,
        // and the monomial with less of it is the smaller one
        let f23 = monomial(&order, &[(2, 3)]);
        let f14 = monomial(&order, &[(1, 4)]);
        assert_eq!(order.monomial_cmp(&f14, &f23), Ordering::Less);
    }

    #[test]
    fn minimal_monomials_for_the_witness() {
        let w = perm("6,4,2,5,3,1");
        let order = InversionOrder::new(&w);
        assert_eq!(
            minimal_monomial(&order, &WedgeIndex::highest(3)),
            Some(ExponentVector::zero(12))
        );
        assert_eq!(
            minimal_monomial(&order, &wedge(&[1, 2, 5, 6])),
            Some(monomial(&order, &[(3, 6), (4, 5)]))
        );
        assert_eq!(
            minimal_monomial(&order, &wedge(&[3, 4])),
            Some(monomial(&order, &[(1, 4), (2, 3)]))
        );
        // unreachable target: (1,4) is not in the level-2 fundamental basis
        assert_eq!(minimal_monomial(&order, &wedge(&[1, 4])), None);
    }

    #[test]
    fn gamma_sizes_for_the_witness() {
        let w = perm("6,4,2,5,3,1");
        assert_eq!(gamma_set(&w, 1).len(), 6);
        assert_eq!(gamma_set(&w, 2).len(), 14);
        assert_eq!(gamma_set(&w, 4).len(), 14);
        assert_eq!(gamma_set(&w, 5).len(), 6);
    }

    #[test]
    fn minkowski_of_a_fundamental_weight_is_gamma() {
        let w = perm("3,1,4,2");
        for k in 1..4u8 {
            let lam = DominantWeight::fundamental(4, k);
            let (set, count) = minkowski_count(&w, &lam);
            let gamma = gamma_set(&w, k);
            assert_eq!(count as usize, gamma.len());
            assert_eq!(set, gamma);
        }
    }

    #[test]
    fn identity_gamma_is_the_origin() {
        let w = Permutation::identity(5);
        for k in 1..5u8 {
            let gamma = gamma_set(&w, k);
            assert_eq!(gamma.len(), 1);
            assert!(gamma.contains(&ExponentVector::zero(0)));
        }
    }
}
