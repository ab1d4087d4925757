//! Coordinates on products of projectivized fundamental modules, the
//! evaluation homomorphisms into the coefficient ring, and the certificate
//! checks around the quartic witness polynomial.
//!
//! A symbol `X_S` is indexed by a wedge index `S`; it carries three
//! gradings: its level degree (one fundamental weight per symbol), the
//! grading of `S`, and the content vector of `S`. The full evaluation sends
//! `X_S` to `z_k · p_S` where `k` is the level of `S`; the restricted
//! evaluation uses the variables of a permutation's inversion set only.
//! A polynomial in the symbols vanishes under the restricted map exactly
//! when it lies in the defining ideal of the closure attached to the
//! permutation, which is what the certificate exploits.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::demazure::fund_basis;
use crate::error::Error;
use crate::linalg::{rat, Rational};
use crate::wedge::WedgeIndex;
use crate::weyl::{DominantWeight, Permutation, WeightVector};
use crate::zpoly::{p_poly, pw_poly, ZPolynomial, ZVar};

/// A coordinate symbol indexed by a wedge index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlueckerSymbol {
    index: WedgeIndex,
}

impl PlueckerSymbol {
    pub fn new(index: WedgeIndex) -> Self {
        PlueckerSymbol { index }
    }

    pub fn from_entries(entries: &[u8]) -> Result<Self, Error> {
        Ok(PlueckerSymbol {
            index: WedgeIndex::new(entries.to_vec())?,
        })
    }

    pub fn index(&self) -> &WedgeIndex {
        &self.index
    }

    pub fn level(&self) -> u8 {
        self.index.level()
    }
}

impl fmt::Display for PlueckerSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X")?;
        write!(f, "{}", self.index)
    }
}

/// A monomial in the symbols: a sorted multiset.
pub type PlueckerMonomial = Vec<PlueckerSymbol>;

fn normalize(mut m: PlueckerMonomial) -> PlueckerMonomial {
    m.sort();
    m
}

pub fn monomial_text(m: &PlueckerMonomial) -> String {
    let parts: Vec<String> = m.iter().map(|s| s.to_string()).collect();
    parts.join("*")
}

/// Content vector of a monomial: coordinate `v` counts the occurrences of
/// the letter `v` across all symbol indices. Additive on products.
pub fn wt_of(m: &PlueckerMonomial, n: u8) -> WeightVector {
    let mut e = alloc::vec![0i32; n as usize];
    for sym in m {
        for &v in sym.index.entries() {
            e[(v - 1) as usize] += 1;
        }
    }
    WeightVector::new(e)
}

/// Total grading of a monomial: the sum of the symbol gradings.
pub fn grad_of(m: &PlueckerMonomial) -> u32 {
    m.iter().map(|s| s.index.pbw_degree()).sum()
}

/// Level degree of a monomial: coordinate `k` counts symbols at level `k`.
pub fn deg_of(m: &PlueckerMonomial, n: u8) -> DominantWeight {
    let mut coords = alloc::vec![0u32; (n - 1) as usize];
    for sym in m {
        coords[(sym.level() - 1) as usize] += 1;
    }
    DominantWeight::new(coords).expect("n >= 2")
}

/// A polynomial in the symbols with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlueckerPolynomial {
    terms: BTreeMap<PlueckerMonomial, Rational>,
}

impl PlueckerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: PlueckerMonomial, c: Rational) -> Self {
        let mut out = Self::default();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: PlueckerMonomial, c: Rational) {
        if c == rat(0) {
            return;
        }
        let key = normalize(m);
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == rat(0) {
                    e.remove();
                }
            }
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlueckerMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Which evaluation to apply to the symbols.
#[derive(Clone, Copy, Debug)]
pub enum CoordinateMap<'a> {
    /// `X_S -> z_k p_S` over all root variables.
    Full,
    /// `X_S -> z_k p_S` with the variables outside the inversion set of the
    /// permutation set to zero.
    Restricted(&'a Permutation),
}

/// Image of a single symbol under the chosen map.
pub fn evaluate_symbol(n: u8, sym: &PlueckerSymbol, map: CoordinateMap) -> ZPolynomial {
    let p = match map {
        CoordinateMap::Full => p_poly(n, &sym.index),
        CoordinateMap::Restricted(w) => pw_poly(n, w, &sym.index),
    };
    ZPolynomial::var(ZVar::Level(sym.level())).mul(&p)
}

/// Substitutes every symbol and multiplies out exactly.
pub fn evaluate(n: u8, p: &PlueckerPolynomial, map: CoordinateMap) -> ZPolynomial {
    let mut out = ZPolynomial::zero();
    for (m, c) in p.terms() {
        let mut product = ZPolynomial::constant(c.clone());
        for sym in m {
            product = product.mul(&evaluate_symbol(n, sym, map));
        }
        out = out.add(&product);
    }
    out
}

/// Symbols at the given levels whose wedge index lies outside the
/// fundamental basis of `w`; these generate the linear part of the
/// defining ideal of the shifted closure.
pub fn schubert_excluded_symbols(w: &Permutation, levels: &[u8]) -> Vec<PlueckerSymbol> {
    let n = w.n();
    let mut out = Vec::new();
    for &k in levels {
        let basis = fund_basis(w, k);
        for s in WedgeIndex::all(n, k) {
            if !basis.contains(&s) {
                out.push(PlueckerSymbol::new(s));
            }
        }
    }
    out
}

/// All monomials of the given level degree with the given content vector
/// that are divisible by `divisor`, by exhaustive enumeration of one symbol
/// multiset per positive weight coordinate.
pub fn monomials_with_wt(
    lam: &DominantWeight,
    wt: &WeightVector,
    divisor: &PlueckerSymbol,
) -> Vec<PlueckerMonomial> {
    let n = lam.n();
    let mut per_level: Vec<Vec<PlueckerMonomial>> = Vec::new();
    for k in 1..n {
        let mult = lam.coord(k);
        if mult == 0 {
            continue;
        }
        per_level.push(multisets(&WedgeIndex::all(n, k), mult as usize));
    }
    let mut out = Vec::new();
    let mut current: PlueckerMonomial = Vec::new();
    fn rec(
        per_level: &[Vec<PlueckerMonomial>],
        pos: usize,
        current: &mut PlueckerMonomial,
        n: u8,
        wt: &WeightVector,
        divisor: &PlueckerSymbol,
        out: &mut Vec<PlueckerMonomial>,
    ) {
        if pos == per_level.len() {
            if wt_of(current, n) == *wt && current.contains(divisor) {
                out.push(normalize(current.clone()));
            }
            return;
        }
        for choice in &per_level[pos] {
            let len = current.len();
            current.extend(choice.iter().cloned());
            rec(per_level, pos + 1, current, n, wt, divisor, out);
            current.truncate(len);
        }
    }
    rec(&per_level, 0, &mut current, n, wt, divisor, &mut out);
    out.sort();
    out
}

/// Multisets of the given size over a slice, each returned sorted.
fn multisets(pool: &[WedgeIndex], size: usize) -> Vec<PlueckerMonomial> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(size);
    fn rec(
        pool: &[WedgeIndex],
        size: usize,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<PlueckerMonomial>,
    ) {
        if current.len() == size {
            out.push(
                current
                    .iter()
                    .map(|&p| PlueckerSymbol::new(pool[p].clone()))
                    .collect(),
            );
            return;
        }
        for p in from..pool.len() {
            current.push(p);
            rec(pool, size, p, current, out);
            current.pop();
        }
    }
    rec(pool, size, 0, &mut current, &mut out);
    out
}

fn symbol(entries: &[u8]) -> PlueckerSymbol {
    PlueckerSymbol::from_entries(entries).expect("hardwired symbol")
}

/// The quartic witness polynomial: the difference of two degree-matched
/// monomials over levels (1, 2, 4, 5) of `sl_6` whose restricted
/// evaluations coincide.
pub fn q_polynomial() -> PlueckerPolynomial {
    let mut q = PlueckerPolynomial::zero();
    q.add_term(
        alloc::vec![
            symbol(&[6]),
            symbol(&[4, 5]),
            symbol(&[2, 4, 5, 6]),
            symbol(&[1, 3, 4, 5, 6]),
        ],
        rat(1),
    );
    q.add_term(
        alloc::vec![
            symbol(&[5]),
            symbol(&[4, 6]),
            symbol(&[1, 4, 5, 6]),
            symbol(&[2, 3, 4, 5, 6]),
        ],
        rat(-1),
    );
    q
}

/// Outcome of one certificate run; every field is a check result or the
/// witness it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QReport {
    /// The restricted evaluation of the witness polynomial, which must
    /// vanish, and its rendering.
    pub restricted_is_zero: bool,
    pub restricted_text: String,
    /// The full evaluation, which must not vanish.
    pub full_is_nonzero: bool,
    pub full_text: String,
    /// For every excluded symbol: its rendering and the number of
    /// monomials that match the witness content vector and are divisible
    /// by it. All counts must be zero.
    pub enumerations: Vec<(String, usize)>,
    pub enumerations_empty: bool,
    /// The degree-two factor divides the first full product ...
    pub first_product_divisible: bool,
    /// ... but none of the four factors of the second product ...
    pub factor_divisions: Vec<(String, bool)>,
    /// ... and not the second product itself.
    pub second_product_divisible: bool,
    /// Restricted images of the eight symbols of the witness polynomial.
    pub pw_values: Vec<(String, String)>,
}

impl QReport {
    pub fn all_pass(&self) -> bool {
        self.restricted_is_zero
            && self.full_is_nonzero
            && self.enumerations_empty
            && self.first_product_divisible
            && self.factor_divisions.iter().all(|(_, d)| !d)
            && !self.second_product_divisible
    }
}

/// Runs the four certificate checks for the witness polynomial against the
/// given permutation of `{1, ..., 6}`.
pub fn verify_q(w: &Permutation) -> Result<QReport, Error> {
    if w.n() != 6 {
        return Err(Error::InvalidPermutation(String::from(
            "the witness certificate is defined for permutations of 1..=6",
        )));
    }
    let n = 6u8;
    let q = q_polynomial();
    let lam = DominantWeight::new(alloc::vec![1, 1, 0, 1, 1]).expect("hardwired weight");

    let restricted = evaluate(n, &q, CoordinateMap::Restricted(w));
    let full = evaluate(n, &q, CoordinateMap::Full);

    // the two products, identified by the sign they carry in the witness
    let mut first: Option<PlueckerMonomial> = None;
    let mut second: Option<PlueckerMonomial> = None;
    for (m, c) in q.terms() {
        if c.is_one() {
            first = Some(m.clone());
        } else {
            second = Some(m.clone());
        }
    }
    let first = first.expect("witness has a positive monomial");
    let second = second.expect("witness has a negative monomial");
    debug_assert_eq!(wt_of(&first, n), wt_of(&second, n));
    debug_assert_eq!(grad_of(&first), 6);
    debug_assert_eq!(grad_of(&second), 6);

    let target_wt = wt_of(&first, n);
    let mut enumerations = Vec::new();
    for sym in schubert_excluded_symbols(w, &lam.support()) {
        let matches = monomials_with_wt(&lam, &target_wt, &sym);
        enumerations.push((sym.to_string(), matches.len()));
    }
    let enumerations_empty = enumerations.iter().all(|(_, c)| *c == 0);

    let divisor = p_poly(n, symbol(&[4, 5]).index());
    let first_eval = evaluate(
        n,
        &PlueckerPolynomial::monomial(first, rat(1)),
        CoordinateMap::Full,
    );
    let second_eval = evaluate(
        n,
        &PlueckerPolynomial::monomial(second.clone(), rat(1)),
        CoordinateMap::Full,
    );
    let factor_divisions: Vec<(String, bool)> = second
        .iter()
        .map(|sym| {
            let factor = p_poly(n, sym.index());
            (sym.to_string(), divisor.divides(&factor))
        })
        .collect();

    let q_symbols = [
        symbol(&[6]),
        symbol(&[4, 5]),
        symbol(&[2, 4, 5, 6]),
        symbol(&[1, 3, 4, 5, 6]),
        symbol(&[5]),
        symbol(&[4, 6]),
        symbol(&[1, 4, 5, 6]),
        symbol(&[2, 3, 4, 5, 6]),
    ];
    let pw_values = q_symbols
        .iter()
        .map(|sym| {
            let p = pw_poly(n, w, sym.index());
            (sym.to_string(), alloc::format!("{p}"))
        })
        .collect();

    Ok(QReport {
        restricted_is_zero: restricted.is_zero(),
        restricted_text: alloc::format!("{restricted}"),
        full_is_nonzero: !full.is_zero(),
        full_text: alloc::format!("{full}"),
        enumerations,
        enumerations_empty,
        first_product_divisible: divisor.divides(&first_eval),
        factor_divisions,
        second_product_divisible: divisor.divides(&second_eval),
        pw_values,
    })
}
