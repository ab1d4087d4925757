//! Exact sparse linear algebra over the rationals.
//!
//! [`SparseVector`] stores nonzero arbitrary-precision rational entries over
//! an arbitrary ordered index set. [`EchelonSpan`] tracks the span of a
//! growing family of vectors in reduced row echelon form: every stored row
//! is monic, its leading index is its pivot, and no row has an entry at
//! another row's pivot. Under this discipline a membership test is a single
//! [`EchelonSpan::reduce`] call, and inserting all vectors of a family in
//! any order yields the same final dimension.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

/// Exact rational scalar used for all coefficients in this crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small integer scalar.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A sparse vector with exact rational coefficients, sorted by index.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector<K> {
    entries: Vec<(K, Rational)>,
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn zero() -> Self {
        SparseVector {
            entries: Vec::new(),
        }
    }

    /// The standard basis vector at index `k`.
    pub fn unit(k: K) -> Self {
        SparseVector {
            entries: alloc::vec![(k, Rational::one())],
        }
    }

    /// Builds a vector from arbitrary terms, merging duplicate indices
    /// additively and dropping resulting zeros.
    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<K, Rational> = BTreeMap::new();
        for (k, c) in terms {
            let slot = map.entry(k).or_insert_with(Rational::zero);
            *slot += c;
        }
        SparseVector {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.entries.iter().map(|(k, c)| (k, c))
    }

    pub fn get(&self, k: &K) -> Option<&Rational> {
        self.entries
            .binary_search_by(|(e, _)| e.cmp(k))
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// The entry with the smallest index.
    pub fn leading(&self) -> Option<(&K, &Rational)> {
        self.entries.first().map(|(k, c)| (k, c))
    }

    /// In-place `self -= factor * other` by sorted merge.
    pub fn sub_scaled(&mut self, other: &SparseVector<K>, factor: &Rational) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (Some((ka, ca)), Some((kb, cb))) => match ka.cmp(kb) {
                    core::cmp::Ordering::Less => {
                        merged.push((ka.clone(), ca.clone()));
                        na = a.next();
                    }
                    core::cmp::Ordering::Greater => {
                        merged.push((kb.clone(), -(factor * cb)));
                        nb = b.next();
                    }
                    core::cmp::Ordering::Equal => {
                        let c = ca - factor * cb;
                        if !c.is_zero() {
                            merged.push((ka.clone(), c));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                },
                (Some((ka, ca)), None) => {
                    merged.push((ka.clone(), ca.clone()));
                    na = a.next();
                }
                (None, Some((kb, cb))) => {
                    merged.push((kb.clone(), -(factor * cb)));
                    nb = b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    /// Scales so that the leading coefficient becomes 1.
    pub fn into_monic(mut self) -> Self {
        if let Some((_, lead)) = self.entries.first() {
            let lead = lead.clone();
            if !lead.is_one() {
                for (_, c) in self.entries.iter_mut() {
                    *c /= &lead;
                }
            }
        }
        self
    }
}

/// An incrementally built span in reduced row echelon form.
///
/// Rows are keyed by their pivot (leading) index. The reduction of a vector
/// against the span is zero exactly when the vector lies in the span.
#[derive(Clone, Debug)]
pub struct EchelonSpan<K> {
    rows: BTreeMap<K, SparseVector<K>>,
}

impl<K: Ord + Clone> EchelonSpan<K> {
    pub fn new() -> Self {
        EchelonSpan {
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVector<K>)> {
        self.rows.iter()
    }

    /// Eliminates every pivot index from `v`; the residual is zero iff
    /// `v` was in the span.
    ///
    /// Entries are processed in increasing index order. Because each stored
    /// row is monic with support `{pivot} ∪ larger non-pivot indices`, an
    /// elimination step removes the current entry and touches only larger
    /// non-pivot indices, so a single left-to-right pass terminates.
    pub fn reduce(&self, v: SparseVector<K>) -> SparseVector<K> {
        let mut v = v;
        let mut pos = 0;
        while pos < v.entries.len() {
            let key = &v.entries[pos].0;
            if let Some(row) = self.rows.get(key) {
                let c = v.entries[pos].1.clone();
                v.sub_scaled(row, &c);
            } else {
                pos += 1;
            }
        }
        v
    }

    /// Adds `v` to the span. Returns `true` (and grows the dimension by
    /// one) exactly when `v` was not already in the span.
    pub fn insert(&mut self, v: SparseVector<K>) -> bool {
        let residual = self.reduce(v);
        if residual.is_zero() {
            return false;
        }
        self.insert_reduced(residual.into_monic());
        true
    }

    /// Membership test without mutation.
    pub fn contains(&self, v: SparseVector<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Stores a row that is already fully reduced against the span and
    /// monic, then eliminates its pivot from every existing row.
    pub(crate) fn insert_reduced(&mut self, row: SparseVector<K>) {
        let (pivot, lead) = row
            .leading()
            .expect("insert_reduced requires a nonzero row");
        debug_assert!(num_traits::One::is_one(lead));
        let pivot = pivot.clone();
        debug_assert!(!self.rows.contains_key(&pivot));
        for existing in self.rows.values_mut() {
            if let Some(c) = existing.get(&pivot).cloned() {
                existing.sub_scaled(&row, &c);
            }
        }
        self.rows.insert(pivot, row);
    }
}

impl<K: Ord + Clone> Default for EchelonSpan<K> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(terms: &[(u32, i64)]) -> SparseVector<u32> {
        SparseVector::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn zero_vector_is_never_new() {
        let mut span = EchelonSpan::new();
        assert!(!span.insert(SparseVector::<u32>::zero()));
        assert_eq!(span.dim(), 0);
    }

    #[test]
    fn unit_insertions() {
        let mut span = EchelonSpan::new();
        assert!(span.insert(vec_of(&[(1, 1)])));
        assert!(span.insert(vec_of(&[(1, 1), (2, 1)])));
        assert!(!span.insert(vec_of(&[(2, 5)])));
        assert_eq!(span.dim(), 2);
    }

    #[test]
    fn reduce_examples() {
        let mut span = EchelonSpan::new();
        let v = vec_of(&[(3, 2), (7, -5)]);
        assert_eq!(span.reduce(v.clone()), v);
        span.insert(v.clone());
        assert!(span.reduce(v).is_zero());

        let mut span = EchelonSpan::new();
        span.insert(vec_of(&[(1, 1)]));
        let r = span.reduce(vec_of(&[(1, 1), (2, 1)]));
        assert_eq!(r, vec_of(&[(2, 1)]));
    }

    #[test]
    fn rows_stay_interreduced() {
        let mut span = EchelonSpan::new();
        span.insert(vec_of(&[(1, 1), (2, 1)]));
        span.insert(vec_of(&[(2, 1), (3, 1)]));
        span.insert(vec_of(&[(3, 1)]));
        // after full reduction the rows must be exactly the unit vectors
        for (pivot, row) in span.rows() {
            assert_eq!(row.len(), 1);
            assert_eq!(row.leading().unwrap().0, pivot);
        }
    }

    #[test]
    fn merge_arithmetic_cancels() {
        let mut v = vec_of(&[(1, 2), (4, 6)]);
        let w = vec_of(&[(1, 1), (4, 3), (9, 5)]);
        v.sub_scaled(&w, &rat(2));
        assert_eq!(v, vec_of(&[(9, -10)]));
    }
}
