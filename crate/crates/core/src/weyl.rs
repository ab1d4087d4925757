//! Symmetric-group combinatorics and weight lattices.
//!
//! Permutations are kept in one-line notation `[w(1), ..., w(n)]` and are
//! 1-indexed throughout, so that inversion sets, root indices and wedge
//! entries can be compared against hand computations without reindexing.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A positive root of `sl_n`, labelled by the pair `1 <= i < j <= n`.
///
/// The same pair labels the lowering operator that moves basis index `i`
/// to basis index `j` in the standard representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootIndex {
    pub i: u8,
    pub j: u8,
}

impl RootIndex {
    pub fn new(i: u8, j: u8) -> Result<Self, Error> {
        if i == 0 || i >= j {
            return Err(Error::InvalidRoot(alloc::format!("({i}, {j})")));
        }
        Ok(RootIndex { i, j })
    }

    /// All roots (i, j) with 1 <= i < j <= n, in lexicographic order.
    pub fn all(n: u8) -> Vec<RootIndex> {
        let mut out = Vec::new();
        for i in 1..n {
            for j in (i + 1)..=n {
                out.push(RootIndex { i, j });
            }
        }
        out
    }

    /// Sort key for the generator ordering used throughout: `i + j`
    /// increasing, ties broken by `j` increasing.
    pub fn order_key(&self) -> (u8, u8) {
        (self.i + self.j, self.j)
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `[w(1), ..., w(n)]`.
    pub fn from_one_line(image: &[u8]) -> Result<Self, Error> {
        let n = image.len();
        if n == 0 || n > 127 {
            return Err(Error::InvalidPermutation(alloc::format!(
                "length {n} out of range"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in image {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "{image:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation {
            image: image.to_vec(),
        })
    }

    /// Parses comma-separated one-line notation, e.g. `"6,4,2,5,3,1"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let image: Vec<u8> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(alloc::format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        Self::from_one_line(&image)
    }

    pub fn identity(n: u8) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// The longest element, `[n, n-1, ..., 1]`.
    pub fn longest(n: u8) -> Self {
        Permutation {
            image: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i` swapping `i` and `i + 1` (1-based).
    pub fn simple(n: u8, i: u8) -> Self {
        debug_assert!(i >= 1 && i < n);
        let mut image: Vec<u8> = (1..=n).collect();
        image.swap((i - 1) as usize, i as usize);
        Permutation { image }
    }

    pub fn n(&self) -> u8 {
        self.image.len() as u8
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: u8) -> u8 {
        self.image[(i - 1) as usize]
    }

    pub fn one_line(&self) -> &[u8] {
        &self.image
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            image: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u8; self.image.len()];
        for (pos, &v) in self.image.iter().enumerate() {
            image[(v - 1) as usize] = pos as u8 + 1;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(p, &v)| v as usize == p + 1)
    }

    /// The inversion set `{ (i, j) : i < j, w(i) > w(j) }` in lexicographic
    /// order. These pairs label the lowering operators attached to `w`.
    pub fn inversions(&self) -> Vec<RootIndex> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in (i + 1)..=n {
                if self.apply(i) > self.apply(j) {
                    out.push(RootIndex { i, j });
                }
            }
        }
        out
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        let n = self.n();
        for i in 1..n {
            for j in (i + 1)..=n {
                if self.apply(i) > self.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether the one-line notation avoids the patterns 4231 and 2413.
    ///
    /// Checked by scanning every 4-element subsequence; with values
    /// `(a, b, c, d)` the patterns read `d < b < c < a` and `c < a < d < b`.
    pub fn is_triangular(&self) -> bool {
        let w = &self.image;
        let n = w.len();
        for p1 in 0..n {
            for p2 in (p1 + 1)..n {
                for p3 in (p2 + 1)..n {
                    for p4 in (p3 + 1)..n {
                        let (a, b, c, d) = (w[p1], w[p2], w[p3], w[p4]);
                        if d < b && b < c && c < a {
                            return false; // 4231
                        }
                        if c < a && a < d && d < b {
                            return false; // 2413
                        }
                    }
                }
            }
        }
        true
    }

    /// A reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}` and
    /// `l = length(w)`, built by greedily removing descents.
    pub fn reduced_word(&self) -> Vec<u8> {
        self.reduced_word_by(DescentChoice::First)
    }

    /// Reduced word with a selectable descent strategy. Any strategy yields
    /// a valid reduced word; distinct strategies usually yield distinct
    /// words, which is what the word-independence tests rely on.
    pub fn reduced_word_by(&self, choice: DescentChoice) -> Vec<u8> {
        let mut x = self.image.clone();
        let mut word = Vec::with_capacity(self.length());
        let mut step = 0usize;
        loop {
            let descents: Vec<u8> = (0..x.len() - 1)
                .filter(|&p| x[p] > x[p + 1])
                .map(|p| p as u8 + 1)
                .collect();
            if descents.is_empty() {
                break;
            }
            let i = match choice {
                DescentChoice::First => descents[0],
                DescentChoice::Last => descents[descents.len() - 1],
                DescentChoice::Alternate => {
                    if step.is_multiple_of(2) {
                        descents[0]
                    } else {
                        descents[descents.len() - 1]
                    }
                }
            };
            x.swap((i - 1) as usize, i as usize);
            word.push(i);
            step += 1;
        }
        word.reverse();
        word
    }

    /// All permutations of `{1, ..., n}` in lexicographic one-line order.
    pub fn all(n: u8) -> Vec<Permutation> {
        let mut image: Vec<u8> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation {
                image: image.clone(),
            });
            // next_permutation
            let len = image.len();
            let Some(pivot) = (0..len.saturating_sub(1))
                .rev()
                .find(|&p| image[p] < image[p + 1])
            else {
                break;
            };
            let succ = (pivot + 1..len)
                .rev()
                .find(|&q| image[q] > image[pivot])
                .unwrap();
            image.swap(pivot, succ);
            image[pivot + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Strategy for picking a descent while building a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentChoice {
    First,
    Last,
    Alternate,
}

/// A dominant integral weight in fundamental-weight coordinates
/// `(a_1, ..., a_{n-1})`, all non-negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    coords: Vec<u32>,
}

impl DominantWeight {
    pub fn new(coords: Vec<u32>) -> Result<Self, Error> {
        if coords.is_empty() || coords.len() > 126 {
            return Err(Error::InvalidWeight(alloc::format!(
                "{} coordinates out of range",
                coords.len()
            )));
        }
        Ok(DominantWeight { coords })
    }

    /// Parses comma-separated coordinates, e.g. `"1,1,0,1,1"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let coords: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(alloc::format!("bad weight coordinate {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        Self::new(coords)
    }

    /// The fundamental weight `ω_k` for `sl_n`.
    pub fn fundamental(n: u8, k: u8) -> Self {
        debug_assert!(k >= 1 && k < n);
        let mut coords = vec![0u32; (n - 1) as usize];
        coords[(k - 1) as usize] = 1;
        DominantWeight { coords }
    }

    pub fn zero(n: u8) -> Self {
        DominantWeight {
            coords: vec![0u32; (n - 1) as usize],
        }
    }

    pub fn n(&self) -> u8 {
        self.coords.len() as u8 + 1
    }

    /// Coordinate `a_k` for 1-based `k`.
    pub fn coord(&self, k: u8) -> u32 {
        self.coords[(k - 1) as usize]
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    /// The strictly increasing tuple of indices `k` with `a_k > 0`.
    /// Empty exactly for the zero weight.
    pub fn support(&self) -> Vec<u8> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(p, _)| p as u8 + 1)
            .collect()
    }

    /// Partition-shaped representative `(λ_1 >= ... >= λ_n)` with
    /// `λ_i = a_i + ... + a_{n-1}` and `λ_n = 0`.
    pub fn partition(&self) -> Vec<i32> {
        let n = self.n() as usize;
        let mut out = vec![0i32; n];
        let mut acc = 0i32;
        for i in (0..n - 1).rev() {
            acc += self.coords[i] as i32;
            out[i] = acc;
        }
        out
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A torus weight recorded in the standard coordinates `e_1, ..., e_n`.
///
/// The stored vector is the content count of a basis tensor, which is the
/// canonical representative used everywhere in this crate. Two weights of
/// the torus of `SL_n` agree exactly when the vectors differ by a constant;
/// within a computation at fixed highest weight all representatives have
/// equal coordinate sums, so plain componentwise equality is the right
/// comparison and is what `Eq`/`Ord` implement.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    e: Vec<i32>,
}

impl WeightVector {
    pub fn new(e: Vec<i32>) -> Self {
        WeightVector { e }
    }

    pub fn coords(&self) -> &[i32] {
        &self.e
    }

    /// The weight after a lowering operator moves index `i` to index `j`.
    pub fn shifted(&self, i: u8, j: u8) -> WeightVector {
        let mut e = self.e.clone();
        e[(i - 1) as usize] -= 1;
        e[(j - 1) as usize] += 1;
        WeightVector { e }
    }

    /// Equality as `SL_n` torus weights: differ by a constant vector.
    pub fn equivalent(&self, other: &WeightVector) -> bool {
        if self.e.len() != other.e.len() || self.e.is_empty() {
            return false;
        }
        let d = self.e[0] - other.e[0];
        self.e.iter().zip(other.e.iter()).all(|(a, b)| a - b == d)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_roundtrip_and_validation() {
        let w = Permutation::parse("6,4,2,5,3,1").unwrap();
        assert_eq!(w.to_string(), "6,4,2,5,3,1");
        assert_eq!(w.apply(3), 2);
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::parse("1,2,x").is_err());
    }

    #[test]
    fn inversions_of_identity_and_longest() {
        assert!(Permutation::identity(5).inversions().is_empty());
        let w0 = Permutation::longest(6);
        assert_eq!(w0.inversions().len(), 15);
        assert_eq!(w0.length(), 15);
    }

    #[test]
    fn inversions_of_counterexample_witness() {
        let w = Permutation::parse("6,4,2,5,3,1").unwrap();
        let inv = w.inversions();
        assert_eq!(inv.len(), 12);
        assert_eq!(w.length(), 12);
        let expected = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ];
        let expected: Vec<RootIndex> = expected.iter().map(|&(i, j)| RootIndex { i, j }).collect();
        assert_eq!(inv, expected);
    }

    #[test]
    fn triangularity() {
        assert!(Permutation::identity(4).is_triangular());
        assert!(Permutation::parse("2,1,3").unwrap().is_triangular());
        // values 6,4,5,1 at positions 1,2,4,6 form a 4231 pattern
        assert!(!Permutation::parse("6,4,2,5,3,1").unwrap().is_triangular());
        assert!(!Permutation::parse("4,2,3,1").unwrap().is_triangular());
        assert!(!Permutation::parse("2,4,1,3").unwrap().is_triangular());
    }

    #[test]
    fn reduced_words_multiply_back() {
        for strategy in [
            DescentChoice::First,
            DescentChoice::Last,
            DescentChoice::Alternate,
        ] {
            let w = Permutation::parse("6,4,2,5,3,1").unwrap();
            let word = w.reduced_word_by(strategy);
            assert_eq!(word.len(), w.length());
            let mut prod = Permutation::identity(6);
            for &i in &word {
                prod = prod.compose(&Permutation::simple(6, i));
            }
            assert_eq!(prod, w);
        }
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::simple(5, 3).reduced_word(), alloc::vec![3]);
    }

    #[test]
    fn all_permutations_lex() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5], Permutation::longest(3));
    }

    #[test]
    fn weight_support_and_partition() {
        let lam = DominantWeight::parse("1,1,0,1,1").unwrap();
        assert_eq!(lam.support(), alloc::vec![1, 2, 4, 5]);
        let mu = DominantWeight::parse("2,1,0,1,1").unwrap();
        assert_eq!(mu.support(), alloc::vec![1, 2, 4, 5]);
        assert_eq!(DominantWeight::zero(6).support(), Vec::<u8>::new());
        assert_eq!(lam.partition(), alloc::vec![4, 3, 2, 2, 1, 0]);
    }

    #[test]
    fn weight_vector_equivalence() {
        let a = WeightVector::new(alloc::vec![4, 3, 2, 2, 1, 0]);
        let b = WeightVector::new(alloc::vec![5, 4, 3, 3, 2, 1]);
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&WeightVector::new(alloc::vec![4, 3, 2, 2, 0, 1])));
        assert_eq!(a.shifted(1, 6).coords(), &[3, 3, 2, 2, 1, 1]);
    }
}
