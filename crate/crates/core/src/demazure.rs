//! Demazure module data: fundamental-weight bases, dimensions via the
//! character recursion, and the graded profile of the classical filtration.

use alloc::vec::Vec;

use crate::character;
use crate::profile::{span_closure, GradedProfile};
use crate::wedge::{ActionMode, FactorShape, WedgeIndex};
use crate::weyl::{DominantWeight, Permutation, RootIndex};

/// The wedge indices spanning the level-`k` module generated from the
/// highest-weight vector by the lowering operators of `w`: those tuples
/// whose `l`-th smallest image under `w` does not exceed the `l`-th
/// smallest of `w(1), ..., w(k)`, for every `l`.
pub fn fund_basis(w: &Permutation, k: u8) -> Vec<WedgeIndex> {
    let n = w.n();
    let mut bound: Vec<u8> = (1..=k).map(|i| w.apply(i)).collect();
    bound.sort_unstable();
    WedgeIndex::all(n, k)
        .into_iter()
        .filter(|s| {
            let mut img: Vec<u8> = s.entries().iter().map(|&i| w.apply(i)).collect();
            img.sort_unstable();
            img.iter().zip(bound.iter()).all(|(a, b)| a <= b)
        })
        .collect()
}

/// `dim D_{wλ}`, by the divided-difference character recursion along a
/// reduced word of `w`, evaluated at the all-ones point.
pub fn demazure_dim(w: &Permutation, lam: &DominantWeight) -> u64 {
    debug_assert_eq!(w.n(), lam.n());
    character::demazure_character(w, lam).dim()
}

/// Generators attached to `w` in the fixed application order.
pub(crate) fn sorted_inversions(w: &Permutation) -> Vec<RootIndex> {
    let mut roots = w.inversions();
    roots.sort_by_key(|r| r.order_key());
    roots
}

/// The `(level, weight)`-refined dimension table of the filtration of the
/// Demazure module by the number of applied lowering operators: the entry
/// at `(m, ν)` is the number of independent weight-`ν` directions first
/// reached with `m` operators. The total equals [`demazure_dim`], computed
/// by an entirely different route.
pub fn classical_filtration_profile(w: &Permutation, lam: &DominantWeight) -> GradedProfile {
    debug_assert_eq!(w.n(), lam.n());
    let shape = FactorShape::from_weight(lam);
    span_closure(w.n(), &shape, &sorted_inversions(w), ActionMode::Classical)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn wt(s: &str) -> DominantWeight {
        DominantWeight::parse(s).unwrap()
    }

    #[test]
    fn fund_basis_extremes() {
        for k in 1..4u8 {
            let basis = fund_basis(&Permutation::identity(4), k);
            assert_eq!(basis, alloc::vec![WedgeIndex::highest(k)]);
        }
        for k in 1..4u8 {
            let basis = fund_basis(&Permutation::longest(4), k);
            assert_eq!(basis.len(), WedgeIndex::all(4, k).len());
        }
    }

    #[test]
    fn fund_basis_of_counterexample_witness() {
        let w = perm("6,4,2,5,3,1");
        assert_eq!(fund_basis(&w, 1).len(), 6);
        assert_eq!(fund_basis(&w, 2).len(), 14);
        assert_eq!(fund_basis(&w, 4).len(), 14);
        assert_eq!(fund_basis(&w, 5).len(), 6);
        // the two excluded indices at levels 2 and 4
        let excl2: Vec<_> = WedgeIndex::all(6, 2)
            .into_iter()
            .filter(|s| !fund_basis(&w, 2).contains(s))
            .collect();
        assert_eq!(
            excl2,
            alloc::vec![WedgeIndex::new(alloc::vec![1, 4]).unwrap()]
        );
        let excl4: Vec<_> = WedgeIndex::all(6, 4)
            .into_iter()
            .filter(|s| !fund_basis(&w, 4).contains(s))
            .collect();
        assert_eq!(
            excl4,
            alloc::vec![WedgeIndex::new(alloc::vec![1, 2, 4, 5]).unwrap()]
        );
    }

    #[test]
    fn dimension_of_identity_and_longest() {
        assert_eq!(demazure_dim(&Permutation::identity(4), &wt("1,2,1")), 1);
        assert_eq!(
            demazure_dim(&Permutation::longest(4), &wt("1,0,1")),
            character::weyl_dim(&wt("1,0,1"))
        );
    }

    #[test]
    fn profile_of_identity_is_the_highest_line() {
        let profile = classical_filtration_profile(&Permutation::identity(3), &wt("1,1"));
        assert_eq!(profile.total(), 1);
        assert_eq!(profile.max_grade(), 0);
    }

    #[test]
    fn profile_total_matches_character_dimension_small() {
        for w in Permutation::all(3) {
            for coords in [[1u32, 0], [0, 1], [1, 1], [2, 1]] {
                let lam = DominantWeight::new(coords.to_vec()).unwrap();
                let profile = classical_filtration_profile(&w, &lam);
                assert_eq!(profile.total(), demazure_dim(&w, &lam), "w={w} lam={lam}");
            }
        }
    }
}
