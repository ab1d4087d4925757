//! Properties of the minimal-monomial lattice sets: degrees forced by the
//! grading, basis cardinalities at small rank, and Minkowski counts.

use pbwdeg::character::weyl_dim;
use pbwdeg::demazure::{demazure_dim, fund_basis};
use pbwdeg::fflv::{gamma_set, minimal_monomial, minkowski_count, InversionOrder};
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
fn minimal_monomial_degree_is_the_grading() {
    for w in Permutation::all(4) {
        let order = InversionOrder::new(&w);
        for k in 1..4u8 {
            for s in fund_basis(&w, k) {
                let m = minimal_monomial(&order, &s).unwrap();
                assert_eq!(m.degree(), s.pbw_degree(), "w={w}, s={s}");
            }
        }
    }
}

#[test]
fn gamma_size_equals_the_fundamental_dimension() {
    for n in 3..=5u8 {
        for w in Permutation::all(n) {
            for k in 1..n {
                let lam = DominantWeight::fundamental(n, k);
                assert_eq!(
                    gamma_set(&w, k).len() as u64,
                    demazure_dim(&w, &lam),
                    "w={w}, k={k}"
                );
            }
        }
    }
}

#[test]
fn longest_element_counts_recover_irreducible_dimensions() {
    // at w = w0 the Minkowski count matches the irreducible dimension
    for n in 2..=4u8 {
        let w0 = Permutation::longest(n);
        for lam in small_weights(n, 2) {
            let (_, count) = minkowski_count(&w0, &lam);
            assert_eq!(count, weyl_dim(&lam), "lam={lam}");
        }
    }
}

#[test]
fn triangular_counts_match_demazure_dimensions_at_rank_four() {
    for w in Permutation::all(4) {
        if !w.is_triangular() {
            continue;
        }
        for lam in small_weights(4, 2) {
            let (_, count) = minkowski_count(&w, &lam);
            assert_eq!(count, demazure_dim(&w, &lam), "w={w}, lam={lam}");
        }
    }
}

#[test]
fn minkowski_count_of_the_zero_free_part_only() {
    // coordinates with a_k = 0 contribute no summand: the support alone
    // determines which gamma sets enter
    let w = Permutation::parse("4,1,3,2").unwrap();
    let lam = DominantWeight::parse("1,0,1").unwrap();
    let (set, count) = minkowski_count(&w, &lam);
    let direct = gamma_set(&w, 1).minkowski(&gamma_set(&w, 3));
    assert_eq!(set, direct);
    assert_eq!(count as usize, direct.len());
}
