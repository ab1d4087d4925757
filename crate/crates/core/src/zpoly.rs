//! Multivariate polynomials in the coefficient variables `z_{i,j}` (one per
//! lowering operator) and the column scalars `z_k` (one per factor level),
//! with exact rational coefficients.
//!
//! The polynomial attached to a wedge index `S` at level `k` is the
//! coefficient of the basis vector `b_S` in `exp(Σ z_{i,j} f_{i,j}) v`,
//! expanded with the degenerate action. The operators commute and square to
//! zero on a wedge, so each contributing monomial is a product of distinct
//! variables with coefficient `±1`, one per application set.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{rat, Rational};
use crate::wedge::{act_degenerate, WedgeIndex};
use crate::weyl::{Permutation, RootIndex};

/// A variable of the coefficient ring: either a root variable `z_{i,j}` or
/// a column scalar `z_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZVar {
    Root(RootIndex),
    Level(u8),
}

impl fmt::Display for ZVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZVar::Root(r) => write!(f, "z[{},{}]", r.i, r.j),
            ZVar::Level(k) => write!(f, "z[{k}]"),
        }
    }
}

/// A monomial: sorted list of `(variable, positive exponent)` pairs.
///
/// The ordering is lexicographic with earlier variables dominating: at the
/// first variable where two monomials differ, the one with the higher
/// exponent is the larger monomial. This is a genuine monomial order, so
/// leading terms are multiplicative and exact division terminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZMonomial {
    vars: Vec<(ZVar, u32)>,
}

impl ZMonomial {
    pub fn one() -> Self {
        ZMonomial::default()
    }

    pub fn var(v: ZVar) -> Self {
        ZMonomial {
            vars: alloc::vec![(v, 1)],
        }
    }

    pub fn from_vars<I: IntoIterator<Item = (ZVar, u32)>>(vars: I) -> Self {
        let mut map: BTreeMap<ZVar, u32> = BTreeMap::new();
        for (v, e) in vars {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        ZMonomial {
            vars: map.into_iter().collect(),
        }
    }

    pub fn vars(&self) -> &[(ZVar, u32)] {
        &self.vars
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn contains(&self, v: ZVar) -> bool {
        self.vars.binary_search_by(|(u, _)| u.cmp(&v)).is_ok()
    }

    pub fn mul(&self, other: &ZMonomial) -> ZMonomial {
        ZMonomial::from_vars(self.vars.iter().copied().chain(other.vars.iter().copied()))
    }

    /// `self / other` when every exponent of `other` fits, else `None`.
    pub fn try_div(&self, other: &ZMonomial) -> Option<ZMonomial> {
        let mut map: BTreeMap<ZVar, u32> = self.vars.iter().copied().collect();
        for &(v, e) in &other.vars {
            match map.get_mut(&v) {
                Some(slot) if *slot >= e => {
                    *slot -= e;
                    if *slot == 0 {
                        map.remove(&v);
                    }
                }
                _ => return None,
            }
        }
        Some(ZMonomial {
            vars: map.into_iter().collect(),
        })
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.vars.iter();
        let mut b = other.vars.iter();
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // the monomial holding the earlier variable has a
                    // positive exponent where the other has zero
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (pos, (v, e)) in self.vars.iter().enumerate() {
            if pos > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients; no zero terms stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPolynomial {
    terms: BTreeMap<ZMonomial, Rational>,
}

impl ZPolynomial {
    pub fn zero() -> Self {
        ZPolynomial::default()
    }

    pub fn one() -> Self {
        ZPolynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = ZPolynomial::default();
        out.add_term(ZMonomial::one(), c);
        out
    }

    pub fn var(v: ZVar) -> Self {
        let mut out = ZPolynomial::default();
        out.add_term(ZMonomial::var(v), rat(1));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ZMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&ZMonomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: ZMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), coeff * c);
        }
        out
    }

    /// Drops every monomial containing a variable rejected by `keep`;
    /// this is substitution of zero for those variables.
    pub fn restrict<F: Fn(ZVar) -> bool>(&self, keep: F) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (m, c) in &self.terms {
            if m.vars().iter().all(|&(v, _)| keep(v)) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder. Single-divisor multivariate division: a leading term
    /// not divisible by the divisor's leading term can never be cancelled
    /// later, so it witnesses a nonzero remainder immediately.
    pub fn div_exact(&self, divisor: &ZPolynomial) -> Option<ZPolynomial> {
        let (dm, dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = ZPolynomial::default();
        while let Some((lm, lc)) = rem.leading() {
            let qm = lm.try_div(dm)?;
            let qc = lc / dc;
            let mut piece = ZPolynomial::default();
            piece.add_term(qm, qc);
            rem = rem.sub(&piece.mul(divisor));
            quot = quot.add(&piece);
        }
        Some(quot)
    }

    pub fn divides(&self, dividend: &ZPolynomial) -> bool {
        dividend.div_exact(self).is_some()
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // leading monomial first
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() && !m.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient of `b_S` in the exponential of the generic degenerate
/// lowering element applied to the level-`k` highest-weight vector, as a
/// polynomial in all root variables of `sl_n`. Homogeneous of degree equal
/// to the grading of `S`, with every coefficient `±1`.
pub fn p_poly(n: u8, s: &WedgeIndex) -> ZPolynomial {
    let degree = s.pbw_degree() as usize;
    let start = WedgeIndex::highest(s.level());
    let roots = RootIndex::all(n);
    let mut out = ZPolynomial::zero();
    // enumerate application sets: subsets of the root list of the forced size
    let mut chosen: Vec<RootIndex> = Vec::with_capacity(degree);
    fn rec(
        roots: &[RootIndex],
        from: usize,
        chosen: &mut Vec<RootIndex>,
        degree: usize,
        start: &WedgeIndex,
        target: &WedgeIndex,
        out: &mut ZPolynomial,
    ) {
        if chosen.len() == degree {
            let mut sign = 1i8;
            let mut current = start.clone();
            for &r in chosen.iter() {
                match act_degenerate(r, &current) {
                    Some((s, next)) => {
                        sign *= s;
                        current = next;
                    }
                    None => return,
                }
            }
            if current == *target {
                out.add_term(
                    ZMonomial::from_vars(chosen.iter().map(|&r| (ZVar::Root(r), 1))),
                    rat(sign as i64),
                );
            }
            return;
        }
        for pos in from..roots.len() {
            chosen.push(roots[pos]);
            rec(roots, pos + 1, chosen, degree, start, target, out);
            chosen.pop();
        }
    }
    rec(&roots, 0, &mut chosen, degree, &start, s, &mut out);
    out
}

/// The restriction of [`p_poly`] to the lowering operators of `w`: root
/// variables outside the inversion set are set to zero.
pub fn pw_poly(n: u8, w: &Permutation, s: &WedgeIndex) -> ZPolynomial {
    let inversions: alloc::collections::BTreeSet<RootIndex> = w.inversions().into_iter().collect();
    p_poly(n, s).restrict(|v| match v {
        ZVar::Root(r) => inversions.contains(&r),
        ZVar::Level(_) => true,
    })
}
