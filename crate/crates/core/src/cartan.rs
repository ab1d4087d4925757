//! The Cartan component of the degenerate module, its graded profile, and
//! the kernel profile of the comparison map from the degenerate Demazure
//! module onto it.

use alloc::collections::BTreeMap;
use alloc::format;

use crate::demazure::{classical_filtration_profile, demazure_dim, sorted_inversions};
use crate::error::Error;
use crate::profile::{span_closure, GradedProfile};
use crate::wedge::{ActionMode, FactorShape};
use crate::weyl::{DominantWeight, Permutation, RootIndex, WeightVector};

/// The `(grading, weight)`-refined dimension table of the span closure of
/// the highest tensor under the degenerate lowering operators of `w`.
/// The closure is grade-synchronous: every round of the closure produces
/// exactly the vectors of the next grading.
pub fn cartan_profile(w: &Permutation, lam: &DominantWeight) -> GradedProfile {
    debug_assert_eq!(w.n(), lam.n());
    let shape = FactorShape::from_weight(lam);
    span_closure(w.n(), &shape, &sorted_inversions(w), ActionMode::Degenerate)
}

/// Dimension of the degenerate module itself: the closure under all
/// degenerate lowering operators. Equals the dimension of the irreducible
/// module of highest weight `λ`.
pub fn degenerate_flag_dim(lam: &DominantWeight) -> u64 {
    let n = lam.n();
    let shape = FactorShape::from_weight(lam);
    let mut roots = RootIndex::all(n);
    roots.sort_by_key(|r| r.order_key());
    span_closure(n, &shape, &roots, ActionMode::Degenerate).total()
}

/// Kernel data of the grade- and weight-preserving comparison map from the
/// degenerate Demazure module onto the Cartan component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    /// Dimension of the degenerate Demazure module.
    pub d_dim: u64,
    /// Dimension of the Cartan component.
    pub e_dim: u64,
    /// `d_dim - e_dim`, the kernel dimension.
    pub kernel_total: u64,
    /// Kernel dimension per `(grading, weight)` cell; only nonzero cells.
    pub kernel_cells: BTreeMap<(u32, WeightVector), u64>,
}

impl KernelReport {
    /// Gradings carrying kernel, each with its slice dimension.
    pub fn by_grade(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (&(grade, _), &count) in &self.kernel_cells {
            *out.entry(grade).or_insert(0) += count;
        }
        out
    }
}

/// Computes the kernel profile as the cellwise difference between the
/// classical filtration profile and the Cartan component profile.
///
/// The comparison map preserves grading and weight and is surjective onto
/// the Cartan component, so per cell the kernel dimension is the difference
/// of the two tables. A negative difference anywhere, or a mismatch between
/// the closure total and the character-formula dimension, indicates a bug
/// and is reported as [`Error::Consistency`].
pub fn kernel_profile(w: &Permutation, lam: &DominantWeight) -> Result<KernelReport, Error> {
    let d_profile = classical_filtration_profile(w, lam);
    let e_profile = cartan_profile(w, lam);
    kernel_from_profiles(w, lam, &d_profile, &e_profile)
}

/// Same as [`kernel_profile`], for callers that already hold the two
/// profiles (e.g. when they were cached).
pub fn kernel_from_profiles(
    w: &Permutation,
    lam: &DominantWeight,
    d_profile: &GradedProfile,
    e_profile: &GradedProfile,
) -> Result<KernelReport, Error> {
    let d_char = demazure_dim(w, lam);
    if d_profile.total() != d_char {
        return Err(Error::Consistency(format!(
            "classical closure total {} != character dimension {} for w={w}, lambda={lam}",
            d_profile.total(),
            d_char
        )));
    }
    let mut kernel_cells = BTreeMap::new();
    let mut kernel_total = 0u64;
    for (cell, &d_entry) in d_profile.cells() {
        let e_entry = e_profile.cell(cell.0, &cell.1);
        if e_entry > d_entry {
            return Err(Error::Consistency(format!(
                "negative kernel cell at (grade {}, weight {}): classical {} < Cartan {}",
                cell.0, cell.1, d_entry, e_entry
            )));
        }
        let diff = d_entry - e_entry;
        if diff > 0 {
            kernel_cells.insert(cell.clone(), diff);
            kernel_total += diff;
        }
    }
    // a Cartan cell absent from the classical table is a bug as well
    for (cell, &e_entry) in e_profile.cells() {
        if d_profile.cell(cell.0, &cell.1) < e_entry {
            return Err(Error::Consistency(format!(
                "negative kernel cell at (grade {}, weight {}): classical {} < Cartan {}",
                cell.0,
                cell.1,
                d_profile.cell(cell.0, &cell.1),
                e_entry
            )));
        }
    }
    debug_assert_eq!(kernel_total, d_profile.total() - e_profile.total());
    Ok(KernelReport {
        d_dim: d_profile.total(),
        e_dim: e_profile.total(),
        kernel_total,
        kernel_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::weyl_dim;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn wt(s: &str) -> DominantWeight {
        DominantWeight::parse(s).unwrap()
    }

    #[test]
    fn identity_closure_is_a_line() {
        let profile = cartan_profile(&Permutation::identity(4), &wt("1,0,1"));
        assert_eq!(profile.total(), 1);
    }

    #[test]
    fn full_closure_recovers_irreducible_dimension() {
        assert_eq!(degenerate_flag_dim(&wt("1,1")), 8);
        assert_eq!(degenerate_flag_dim(&wt("1,0,1")), 15);
        assert_eq!(degenerate_flag_dim(&wt("2,1")), weyl_dim(&wt("2,1")));
    }

    #[test]
    fn longest_element_closure_equals_full_closure() {
        let lam = wt("1,1,1");
        let profile = cartan_profile(&Permutation::longest(4), &lam);
        assert_eq!(profile.total(), weyl_dim(&lam));
    }

    #[test]
    fn kernel_vanishes_for_small_rank() {
        for w in Permutation::all(3) {
            for coords in [[1u32, 1], [2, 1], [1, 2]] {
                let lam = DominantWeight::new(coords.to_vec()).unwrap();
                let report = kernel_profile(&w, &lam).unwrap();
                assert_eq!(report.kernel_total, 0, "w={w} lam={lam}");
                assert_eq!(report.d_dim, report.e_dim);
            }
        }
    }

    #[test]
    fn grade_bound_from_factor_levels() {
        let w = perm("4,2,3,1");
        let lam = wt("1,1,1");
        let profile = cartan_profile(&w, &lam);
        // maximal grading is additive over factors: sum of min(k, n-k)
        let bound: u32 = [1u32, 2, 1].iter().sum();
        assert!(profile.max_grade() <= bound);
    }
}
