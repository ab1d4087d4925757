//! Characters on the weight lattice and the divided-difference recursion.
//!
//! A character is a finite integer combination of lattice points
//! `(μ_1, ..., μ_n)`, representing the Laurent polynomial
//! `Σ c_μ x_1^{μ_1} ... x_n^{μ_n}`. The operator attached to the simple
//! reflection `s_i` sends `x^μ` with `m = μ_i - μ_{i+1}` to the geometric
//! sum `x^μ + x^{μ-α_i} + ... + x^{s_i μ}` (empty for `m = -1`, negated and
//! reflected for `m <= -2`); applying these along a reduced word computes
//! the module generated from the extremal weight vector. The result does
//! not depend on the chosen reduced word.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::weyl::{DominantWeight, Permutation, WeightVector};

/// A finite integer combination of weight lattice points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterPolynomial {
    terms: BTreeMap<Vec<i32>, i64>,
}

impl CharacterPolynomial {
    pub fn monomial(weight: Vec<i32>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(weight, 1);
        CharacterPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, weight: &[i32]) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Evaluation at `x_1 = ... = x_n = 1`, i.e. the dimension when the
    /// character is a genuine module character.
    pub fn dim(&self) -> u64 {
        let total: i64 = self.terms.values().sum();
        debug_assert!(total >= 0);
        total as u64
    }

    fn add_term(&mut self, weight: Vec<i32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(weight) {
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// The divided-difference step for the simple reflection `s_i`
    /// (1-based `i`), expanded monomial by monomial as a geometric sum.
    pub fn demazure_step(&self, i: u8) -> CharacterPolynomial {
        let p = (i - 1) as usize;
        let mut out = CharacterPolynomial::default();
        for (mu, &c) in &self.terms {
            let m = mu[p] - mu[p + 1];
            if m >= 0 {
                for t in 0..=m {
                    let mut w = mu.clone();
                    w[p] -= t;
                    w[p + 1] += t;
                    out.add_term(w, c);
                }
            } else if m <= -2 {
                for t in 1..=(-m - 1) {
                    let mut w = mu.clone();
                    w[p] += t;
                    w[p + 1] -= t;
                    out.add_term(w, -c);
                }
            }
            // m == -1 contributes nothing
        }
        out
    }
}

/// Character of the module generated from the extremal weight vector of
/// weight `w·λ`, computed along the given reduced word. The word's last
/// letter acts first.
pub fn demazure_character_for_word(word: &[u8], lam: &DominantWeight) -> CharacterPolynomial {
    let mut ch = CharacterPolynomial::monomial(lam.partition());
    for &i in word.iter().rev() {
        ch = ch.demazure_step(i);
    }
    ch
}

/// Character of the module generated from the extremal weight vector of
/// weight `w·λ`.
pub fn demazure_character(w: &Permutation, lam: &DominantWeight) -> CharacterPolynomial {
    demazure_character_for_word(&w.reduced_word(), lam)
}

/// Per-weight multiplicities expected of the shifted module generated from
/// the highest-weight vector by the lowering operators of `w`: the shift
/// carries weight `ν` to `w·ν`, so the multiplicity at content vector `ν`
/// equals the character coefficient at the permuted vector.
pub fn shifted_weight_multiplicities(
    w: &Permutation,
    lam: &DominantWeight,
) -> BTreeMap<WeightVector, u64> {
    let ch = demazure_character(w, lam);
    let n = w.n();
    let mut out = BTreeMap::new();
    for (mu, &c) in ch.terms() {
        debug_assert!(c >= 0);
        // ν with ν_i = μ_{w(i)}
        let nu: Vec<i32> = (1..=n).map(|i| mu[(w.apply(i) - 1) as usize]).collect();
        out.insert(WeightVector::new(nu), c as u64);
    }
    out
}

/// Dimension of the irreducible module of highest weight `λ`, by the
/// product formula `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)` over the
/// partition representative.
pub fn weyl_dim(lam: &DominantWeight) -> u64 {
    let part = lam.partition();
    let n = part.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(part[i] - part[j] + (j as i32 - i as i32));
            den *= BigInt::from(j as i32 - i as i32);
        }
    }
    let q = num / den;
    debug_assert!(!q.is_zero());
    q.to_u64().expect("dimension exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DescentChoice;

    fn wt(coords: &str) -> DominantWeight {
        DominantWeight::parse(coords).unwrap()
    }

    #[test]
    fn identity_word_gives_a_point() {
        let ch = demazure_character_for_word(&[], &wt("1,1"));
        assert_eq!(ch.dim(), 1);
        assert_eq!(ch.coeff(&[2, 1, 0]), 1);
    }

    #[test]
    fn single_reflection_small_rank() {
        // s_1 acting on the first fundamental weight of sl_2
        let ch = demazure_character_for_word(&[1], &wt("1"));
        assert_eq!(ch.dim(), 2);
        assert_eq!(ch.coeff(&[1, 0]), 1);
        assert_eq!(ch.coeff(&[0, 1]), 1);
    }

    #[test]
    fn longest_element_recovers_weyl_dimension() {
        for (coords, n) in [("1,1", 3), ("1,0,1", 4), ("2,1,2", 4)] {
            let lam = wt(coords);
            let w0 = Permutation::longest(n);
            let ch = demazure_character(&w0, &lam);
            assert_eq!(ch.dim(), weyl_dim(&lam));
        }
        assert_eq!(weyl_dim(&wt("1,1")), 8);
        assert_eq!(weyl_dim(&wt("1,0,1")), 15);
    }

    #[test]
    fn word_independence_on_longest_element() {
        let lam = wt("1,2,1");
        let w0 = Permutation::longest(4);
        let words = [
            w0.reduced_word_by(DescentChoice::First),
            w0.reduced_word_by(DescentChoice::Last),
            w0.reduced_word_by(DescentChoice::Alternate),
        ];
        let chars: Vec<CharacterPolynomial> = words
            .iter()
            .map(|word| demazure_character_for_word(word, &lam))
            .collect();
        assert_eq!(chars[0], chars[1]);
        assert_eq!(chars[0], chars[2]);
    }

    #[test]
    fn counterexample_dimensions() {
        let w = Permutation::parse("6,4,2,5,3,1").unwrap();
        assert_eq!(demazure_character(&w, &wt("1,1,0,1,1")).dim(), 2942);
        assert_eq!(demazure_character(&w, &wt("2,1,0,1,1")).dim(), 8226);
    }
}
