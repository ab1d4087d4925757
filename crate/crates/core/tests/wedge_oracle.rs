//! Oracle checks for the wedge actions: reordering signs recomputed from
//! scratch, the structure-constant identity, commutativity of the graded
//! action, and weight bookkeeping.

use pbwdeg::linalg::{rat, Rational, SparseVector};
use pbwdeg::wedge::{
    act_classical, act_degenerate, tensor_act, ActionMode, FactorShape, TensorIndex, WedgeIndex,
};
use pbwdeg::weyl::{DominantWeight, RootIndex};

/// Independent sign oracle: write down the raw replaced tuple, then count
/// the transpositions bubble sort needs to order it.
fn sign_by_sorting(r: RootIndex, s: &WedgeIndex) -> Option<(i64, Vec<u8>)> {
    if !s.entries().contains(&r.i) || s.entries().contains(&r.j) {
        return None;
    }
    let mut raw: Vec<u8> = s
        .entries()
        .iter()
        .map(|&x| if x == r.i { r.j } else { x })
        .collect();
    let mut swaps = 0i64;
    loop {
        let mut done = true;
        for p in 0..raw.len() - 1 {
            if raw[p] > raw[p + 1] {
                raw.swap(p, p + 1);
                swaps += 1;
                done = false;
            }
        }
        if done {
            break;
        }
    }
    Some((if swaps % 2 == 0 { 1 } else { -1 }, raw))
}

#[test]
fn classical_signs_match_the_sorting_oracle() {
    for n in 2..=6u8 {
        for k in 1..n {
            for s in WedgeIndex::all(n, k) {
                for r in RootIndex::all(n) {
                    let actual = act_classical(r, &s);
                    let expected = sign_by_sorting(r, &s);
                    match (actual, expected) {
                        (None, None) => {}
                        (Some((sign, out)), Some((esign, eentries))) => {
                            assert_eq!(sign as i64, esign, "sign at r={r}, s={s}");
                            assert_eq!(out.entries(), &eentries[..]);
                        }
                        (a, e) => panic!("divergence at r={r}, s={s}: {a:?} vs {e:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn degenerate_equals_classical_exactly_on_grade_raising_moves() {
    for n in 2..=6u8 {
        for k in 1..n {
            for s in WedgeIndex::all(n, k) {
                for r in RootIndex::all(n) {
                    let classical = act_classical(r, &s);
                    let degenerate = act_degenerate(r, &s);
                    if r.i <= k && k < r.j {
                        assert_eq!(degenerate, classical);
                    } else {
                        assert_eq!(degenerate, None);
                    }
                    if let Some((_, out)) = degenerate {
                        assert_eq!(out.pbw_degree(), s.pbw_degree() + 1);
                    }
                }
            }
        }
    }
}

/// Applies a single wedge-level operator linearly to a sparse combination.
fn apply_linear(
    mode: ActionMode,
    r: RootIndex,
    v: &SparseVector<WedgeIndex>,
) -> SparseVector<WedgeIndex> {
    let mut terms: Vec<(WedgeIndex, Rational)> = Vec::new();
    for (s, c) in v.iter() {
        if let Some((sign, out)) = pbwdeg::wedge::act(mode, r, s) {
            terms.push((out, c * rat(sign as i64)));
        }
    }
    SparseVector::from_terms(terms)
}

#[test]
fn classical_structure_constants_on_wedges() {
    // [f_{j,l}, f_{i,j}] = f_{i,l} for i < j < l, checked on every basis
    // vector of every level for n = 5
    let n = 5u8;
    for i in 1..n {
        for j in (i + 1)..n {
            for l in (j + 1)..=n {
                let fij = RootIndex::new(i, j).unwrap();
                let fjl = RootIndex::new(j, l).unwrap();
                let fil = RootIndex::new(i, l).unwrap();
                for k in 1..n {
                    for s in WedgeIndex::all(n, k) {
                        let v = SparseVector::unit(s.clone());
                        let ab = apply_linear(
                            ActionMode::Classical,
                            fjl,
                            &apply_linear(ActionMode::Classical, fij, &v),
                        );
                        let ba = apply_linear(
                            ActionMode::Classical,
                            fij,
                            &apply_linear(ActionMode::Classical, fjl, &v),
                        );
                        let mut lhs = ab;
                        lhs.sub_scaled(&ba, &rat(1));
                        let rhs = apply_linear(ActionMode::Classical, fil, &v);
                        assert_eq!(lhs, rhs, "failure at ({i},{j},{l}), s={s}");
                    }
                }
            }
        }
    }
}

/// All basis tensors of a shape, by taking every combination of components
/// (with non-decreasing choices within equal-level groups).
fn all_tensor_indices(n: u8, lam: &DominantWeight) -> Vec<TensorIndex> {
    let shape = FactorShape::from_weight(lam);
    let mut out: Vec<Vec<WedgeIndex>> = vec![Vec::new()];
    let levels = shape.levels();
    for (pos, &k) in levels.iter().enumerate() {
        let choices = WedgeIndex::all(n, k);
        let mut next = Vec::new();
        for partial in &out {
            for choice in &choices {
                // keep equal-level groups sorted to enumerate each basis
                // element of the symmetric product exactly once
                if pos > 0 && levels[pos - 1] == k {
                    if let Some(prev) = partial.last() {
                        if choice < prev {
                            continue;
                        }
                    }
                }
                let mut extended = partial.clone();
                extended.push(choice.clone());
                next.push(extended);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|components| TensorIndex::new(components).unwrap())
        .collect()
}

#[test]
fn degenerate_tensor_actions_commute_pairwise() {
    for (n, coords) in [(3u8, vec![1u32, 1]), (4, vec![1, 0, 1]), (3, vec![2, 0])] {
        let lam = DominantWeight::new(coords).unwrap();
        let roots = RootIndex::all(n);
        for t in all_tensor_indices(n, &lam) {
            for &r1 in &roots {
                for &r2 in &roots {
                    let first = tensor_act(ActionMode::Degenerate, r1, &t);
                    let mut path_a: Vec<(TensorIndex, Rational)> = Vec::new();
                    for (u, c) in first.iter() {
                        for (v, d) in tensor_act(ActionMode::Degenerate, r2, u).iter() {
                            path_a.push((v.clone(), c * d));
                        }
                    }
                    let second = tensor_act(ActionMode::Degenerate, r2, &t);
                    let mut path_b: Vec<(TensorIndex, Rational)> = Vec::new();
                    for (u, c) in second.iter() {
                        for (v, d) in tensor_act(ActionMode::Degenerate, r1, u).iter() {
                            path_b.push((v.clone(), c * d));
                        }
                    }
                    assert_eq!(
                        SparseVector::from_terms(path_a),
                        SparseVector::from_terms(path_b),
                        "r1={r1} r2={r2} t={t}"
                    );
                }
            }
        }
    }
}

#[test]
fn tensor_action_shifts_the_torus_weight() {
    for (n, coords) in [(4u8, vec![1u32, 1, 0]), (5, vec![0, 1, 0, 1])] {
        let lam = DominantWeight::new(coords).unwrap();
        for t in all_tensor_indices(n, &lam) {
            let wt = t.torus_weight(n);
            for r in RootIndex::all(n) {
                for mode in [ActionMode::Classical, ActionMode::Degenerate] {
                    for (u, _) in tensor_act(mode, r, &t).iter() {
                        assert_eq!(u.torus_weight(n), wt.shifted(r.i, r.j));
                    }
                }
            }
        }
    }
}
