//! Fundamental modules as exterior powers, their lowering-operator actions,
//! and symmetric tensor products thereof.
//!
//! The standard module of `sl_n` has basis `b_1, ..., b_n`; the fundamental
//! module at level `k` is its `k`-th exterior power with basis indexed by
//! strictly increasing `k`-tuples. The lowering operator labelled `(i, j)`
//! moves `b_i` to `b_j`. Two actions are implemented:
//!
//! * the classical action on a wedge, with the reordering sign;
//! * the degenerate action, which keeps only the steps that raise the
//!   grading counting entries above the level (the associated graded action
//!   of the abelianized lowering algebra).
//!
//! Products are modelled in the symmetric normal form: one component per
//! tensor factor, components of equal level kept sorted, and identical
//! components arising from different factor slots merged additively.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::linalg::{rat, Rational, SparseVector};
use crate::weyl::{DominantWeight, RootIndex, WeightVector};

/// Basis index of an exterior power: a strictly increasing tuple in 1..=n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex {
    entries: Vec<u8>,
}

impl WedgeIndex {
    pub fn new(entries: Vec<u8>) -> Result<Self, Error> {
        if entries.is_empty() || entries.windows(2).any(|w| w[0] >= w[1]) || entries[0] == 0 {
            return Err(Error::InvalidWedgeIndex(alloc::format!("{entries:?}")));
        }
        Ok(WedgeIndex { entries })
    }

    /// The highest-weight index `(1, ..., k)` at level `k`.
    pub fn highest(k: u8) -> Self {
        WedgeIndex {
            entries: (1..=k).collect(),
        }
    }

    /// All level-`k` indices with entries in 1..=n, in lexicographic order.
    pub fn all(n: u8, k: u8) -> Vec<WedgeIndex> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = Vec::with_capacity(k as usize);
        fn rec(n: u8, k: u8, start: u8, current: &mut Vec<u8>, out: &mut Vec<WedgeIndex>) {
            if current.len() == k as usize {
                out.push(WedgeIndex {
                    entries: current.clone(),
                });
                return;
            }
            let remaining = k as usize - current.len();
            for v in start..=(n + 1 - remaining as u8) {
                current.push(v);
                rec(n, k, v + 1, current, out);
                current.pop();
            }
        }
        rec(n, k, 1, &mut current, &mut out);
        out
    }

    pub fn level(&self) -> u8 {
        self.entries.len() as u8
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn contains(&self, v: u8) -> bool {
        self.entries.binary_search(&v).is_ok()
    }

    /// Number of entries exceeding the level; the grading of the basis
    /// vector, i.e. the least number of lowering steps needed to reach it
    /// from the highest-weight index.
    pub fn pbw_degree(&self) -> u32 {
        let k = self.level();
        self.entries.iter().filter(|&&v| v > k).count() as u32
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, v) in self.entries.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Classical action of the lowering operator `(i, j)` on a wedge basis
/// vector: replace entry `i` by `j`, resort, and pick up the sign
/// `(-1)^{#\{s in S : i < s < j\}}` from the reordering.
pub fn act_classical(r: RootIndex, s: &WedgeIndex) -> Option<(i8, WedgeIndex)> {
    if !s.contains(r.i) || s.contains(r.j) {
        return None;
    }
    let between = s.entries.iter().filter(|&&x| r.i < x && x < r.j).count();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    let mut entries: Vec<u8> = s.entries.iter().copied().filter(|&x| x != r.i).collect();
    let pos = entries.partition_point(|&x| x < r.j);
    entries.insert(pos, r.j);
    Some((sign, WedgeIndex { entries }))
}

/// Degenerate (associated graded) action: equals the classical action when
/// that action raises the grading by one, i.e. when `i <= k < j`, and is
/// zero otherwise.
pub fn act_degenerate(r: RootIndex, s: &WedgeIndex) -> Option<(i8, WedgeIndex)> {
    let k = s.level();
    if r.i <= k && k < r.j {
        act_classical(r, s)
    } else {
        None
    }
}

/// Which of the two actions a computation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionMode {
    Classical,
    Degenerate,
}

pub fn act(mode: ActionMode, r: RootIndex, s: &WedgeIndex) -> Option<(i8, WedgeIndex)> {
    match mode {
        ActionMode::Classical => act_classical(r, s),
        ActionMode::Degenerate => act_degenerate(r, s),
    }
}

/// The multiset of factor levels of a tensor product determined by a
/// dominant weight: level `k` occurs `a_k` times, levels in increasing
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorShape {
    levels: Vec<u8>,
}

impl FactorShape {
    pub fn from_weight(weight: &DominantWeight) -> Self {
        let mut levels = Vec::new();
        for k in 1..weight.n() {
            for _ in 0..weight.coord(k) {
                levels.push(k);
            }
        }
        FactorShape { levels }
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn factor_count(&self) -> usize {
        self.levels.len()
    }

    /// Ambient dimension of the symmetric tensor space: the product over
    /// levels `k` of `C(C(n,k) + a_k - 1, a_k)`.
    pub fn ambient_dim(&self, n: u8) -> u128 {
        let mut dim = 1u128;
        let mut pos = 0;
        while pos < self.levels.len() {
            let k = self.levels[pos];
            let mult = self.levels[pos..].iter().take_while(|&&l| l == k).count();
            let base = binomial(n as u64, k as u64);
            dim *= binomial(base + mult as u64 - 1, mult as u64) as u128;
            pos += mult;
        }
        dim
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Basis index of the symmetric tensor space: one wedge index per factor,
/// with components of equal level kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorIndex {
    components: Vec<WedgeIndex>,
}

impl TensorIndex {
    /// Builds an index from components whose levels must be weakly
    /// increasing; equal-level runs are normalized into sorted order.
    pub fn new(components: Vec<WedgeIndex>) -> Result<Self, Error> {
        if components.windows(2).any(|w| w[0].level() > w[1].level()) {
            return Err(Error::InvalidWedgeIndex(alloc::string::String::from(
                "factor levels must be weakly increasing",
            )));
        }
        let mut out = TensorIndex { components };
        let mut pos = 0;
        while pos < out.components.len() {
            out.normalize_run(pos);
            pos += 1;
        }
        Ok(out)
    }

    /// The highest tensor: every factor at its highest-weight index.
    pub fn highest(shape: &FactorShape) -> Self {
        TensorIndex {
            components: shape
                .levels()
                .iter()
                .map(|&k| WedgeIndex::highest(k))
                .collect(),
        }
    }

    pub fn components(&self) -> &[WedgeIndex] {
        &self.components
    }

    /// Content count of every basis letter: coordinate `m` is the number of
    /// occurrences of `m` across all components.
    pub fn torus_weight(&self, n: u8) -> WeightVector {
        let mut e = alloc::vec![0i32; n as usize];
        for comp in &self.components {
            for &v in comp.entries() {
                e[(v - 1) as usize] += 1;
            }
        }
        WeightVector::new(e)
    }

    /// Sum of the component gradings.
    pub fn total_grade(&self) -> u32 {
        self.components.iter().map(|c| c.pbw_degree()).sum()
    }

    /// Restores the sorted order of the equal-level run containing `slot`
    /// after that component changed. No sign and no multiplicity factor:
    /// the product within a run is symmetric.
    fn normalize_run(&mut self, slot: usize) {
        let level = self.components[slot].level();
        let mut lo = slot;
        while lo > 0 && self.components[lo - 1].level() == level {
            lo -= 1;
        }
        let mut hi = slot + 1;
        while hi < self.components.len() && self.components[hi].level() == level {
            hi += 1;
        }
        self.components[lo..hi].sort();
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, comp) in self.components.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{comp}")?;
        }
        write!(f, "]")
    }
}

/// Calls `f` once per Leibniz term of the action of the operator `(i, j)`
/// on a basis tensor: the operator is applied to each factor in turn with
/// the other factors fixed.
pub(crate) fn for_each_term<F: FnMut(i8, TensorIndex)>(
    mode: ActionMode,
    r: RootIndex,
    t: &TensorIndex,
    mut f: F,
) {
    for slot in 0..t.components.len() {
        if let Some((sign, replaced)) = act(mode, r, &t.components[slot]) {
            let mut out = t.clone();
            out.components[slot] = replaced;
            out.normalize_run(slot);
            f(sign, out);
        }
    }
}

/// Leibniz action of the operator `(i, j)` on a basis tensor, as a sparse
/// vector over basis tensors. Terms landing on the same normalized index
/// accumulate additively.
pub fn tensor_act(mode: ActionMode, r: RootIndex, t: &TensorIndex) -> SparseVector<TensorIndex> {
    let mut map: BTreeMap<TensorIndex, Rational> = BTreeMap::new();
    for_each_term(mode, r, t, |sign, out| {
        let entry = map.entry(out).or_insert_with(|| rat(0));
        *entry += rat(sign as i64);
    });
    SparseVector::from_terms(map)
}

/// Parses the nested-list form `[[1],[1,2],[1,2,3,4]]`.
pub fn parse_tensor_index(s: &str) -> Result<TensorIndex, Error> {
    let s = s.trim();
    let inner = s
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| Error::Parse(String::from("tensor index must look like [[..],[..]]")))?;
    let mut components = Vec::new();
    for part in inner.split("],[") {
        let entries: Vec<u8> = part
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(alloc::format!("bad tensor entry {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        components.push(WedgeIndex::new(entries)?);
    }
    Ok(TensorIndex { components })
}
