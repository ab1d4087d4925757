//! Desk-scale checks of the Cartan component closure and kernel profiles.

use pbwdeg::cartan::{cartan_profile, degenerate_flag_dim, kernel_profile};
use pbwdeg::character::weyl_dim;
use pbwdeg::demazure::{classical_filtration_profile, demazure_dim};
use pbwdeg::fflv::minkowski_count;
use pbwdeg::weyl::{DominantWeight, Permutation};

fn small_weights(n: u8, bound: u32) -> Vec<DominantWeight> {
    let len = (n - 1) as usize;
    let mut out = Vec::new();
    for mut code in 0..(bound + 1).pow(len as u32) {
        let mut coords = vec![0u32; len];
        for slot in coords.iter_mut() {
            *slot = code % (bound + 1);
            code /= bound + 1;
        }
        let lam = DominantWeight::new(coords).unwrap();
        if !lam.is_zero() {
            out.push(lam);
        }
    }
    out
}

#[test]
fn full_degenerate_closure_has_the_irreducible_dimension() {
    for n in 2..=4u8 {
        for lam in small_weights(n, 2) {
            assert_eq!(degenerate_flag_dim(&lam), weyl_dim(&lam), "lam={lam}");
        }
    }
}

#[test]
fn cartan_total_never_exceeds_the_demazure_dimension() {
    for w in Permutation::all(4) {
        for lam in [
            DominantWeight::parse("1,0,1").unwrap(),
            DominantWeight::parse("1,1,0").unwrap(),
        ] {
            let e = cartan_profile(&w, &lam).total();
            let d = demazure_dim(&w, &lam);
            assert!(e <= d, "w={w}, lam={lam}: {e} > {d}");
        }
    }
}

#[test]
fn per_cell_monotonicity_under_the_classical_table() {
    for w in [
        Permutation::parse("3,1,2").unwrap(),
        Permutation::parse("4,2,3,1").unwrap(),
        Permutation::parse("2,4,1,3").unwrap(),
    ] {
        let lam = DominantWeight::new(vec![1; (w.n() - 1) as usize]).unwrap();
        let classical = classical_filtration_profile(&w, &lam);
        let cartan = cartan_profile(&w, &lam);
        for (cell, &count) in cartan.cells() {
            assert!(
                classical.cell(cell.0, &cell.1) >= count,
                "cell {:?} of w={w}",
                cell
            );
        }
    }
}

#[test]
fn triangular_elements_have_no_kernel_at_rank_three() {
    for w in Permutation::all(3) {
        // every element of S_3 avoids the length-4 patterns
        assert!(w.is_triangular());
        for lam in small_weights(3, 2) {
            let report = kernel_profile(&w, &lam).unwrap();
            assert_eq!(report.kernel_total, 0, "w={w}, lam={lam}");
            assert!(report.kernel_cells.is_empty());
        }
    }
}

#[test]
fn lattice_count_bounds_the_cartan_dimension() {
    for w in Permutation::all(4) {
        let lam = DominantWeight::parse("1,1,0").unwrap();
        let (_, gamma) = minkowski_count(&w, &lam);
        let e = cartan_profile(&w, &lam).total();
        assert!(gamma <= e, "w={w}: gamma {gamma} > e {e}");
    }
}

#[test]
fn consistency_guard_rejects_profile_mismatch() {
    // feeding the kernel computation two profiles of different highest
    // weights must trip the consistency check, not produce a report
    let w = Permutation::parse("3,1,2").unwrap();
    let lam = DominantWeight::parse("1,1").unwrap();
    let other = DominantWeight::parse("2,1").unwrap();
    let d = classical_filtration_profile(&w, &other);
    let e = cartan_profile(&w, &lam);
    let result = pbwdeg::cartan::kernel_from_profiles(&w, &lam, &d, &e);
    assert!(result.is_err());
}
