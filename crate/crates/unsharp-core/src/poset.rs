//! Finite bounded posets and the set-level order machinery: upper and
//! lower bound sets, maximal/minimal elements, and the four comparison
//! relations between nonempty subsets.
//!
//! Elements are plain indices into a carrier of at most 64 elements, so
//! subsets are single-word bitmasks ([`ElemSet`]) and every order query
//! is a handful of word operations. Canonical order of a set is index
//! order, i.e. the declaration order of the carrier.

use thiserror::Error;

/// Largest supported carrier. Subsets are one `u64` wide.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of a carrier of at most 64 elements, as a bitmask.
///
/// The empty set is representable (it shows up as an intermediate value,
/// e.g. the common bounds of an incompatible pair), but operators that
/// promise nonempty antichains never return it.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElemSet(1 << i)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersect(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The unique member of a singleton set.
    pub fn only(self) -> Option<usize> {
        if self.len() == 1 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Members in canonical (index) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(items: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in items {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("carrier has {0} elements, at most {MAX_ELEMENTS} supported")]
    TooManyElements(usize),
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("element {0} is not above the bottom element")]
    NotAboveBottom(usize),
    #[error("element {0} is not below the top element")]
    NotBelowTop(usize),
}

/// The set `Max A` or `Min A` is undefined for the empty set.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("maximal/minimal elements are undefined for the empty set")]
pub struct EmptySelection;

/// A finite bounded poset over indices `0..n`.
///
/// `up[i]` is the bitmask of all `j` with `i <= j` (including `i`), and
/// `down[i]` the dual; both are closed under the order by construction,
/// so every query below is a constant number of word operations per
/// member touched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    bottom: usize,
    top: usize,
}

impl Poset {
    /// Builds a poset from a reflexive-antisymmetric-transitive relation,
    /// verifying all three properties plus boundedness.
    pub fn new(
        n: usize,
        bottom: usize,
        top: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let up = (0..n)
            .map(|i| ElemSet::from_iter((0..n).filter(|&j| leq(i, j))))
            .collect();
        Self::from_up_sets(up, bottom, top)
    }

    /// Builds a poset from precomputed up-sets (`up[i]` = all `j >= i`).
    #[allow(clippy::needless_range_loop)]
    pub fn from_up_sets(up: Vec<ElemSet>, bottom: usize, top: usize) -> Result<Self, PosetError> {
        let n = up.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        for (i, u) in up.iter().enumerate() {
            if !u.contains(i) {
                return Err(PosetError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(PosetError::NotAntisymmetric(i, j));
                }
                if !up[j].is_subset(up[i]) {
                    let k = up[j].iter().find(|&k| !up[i].contains(k)).unwrap();
                    return Err(PosetError::NotTransitive(i, j, k));
                }
            }
        }
        let full = ElemSet(if n == 64 { u64::MAX } else { (1 << n) - 1 });
        if up[bottom] != full {
            let missing = full.iter().find(|&x| !up[bottom].contains(x)).unwrap();
            return Err(PosetError::NotAboveBottom(missing));
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for i in 0..n {
            for j in up[i].iter() {
                down[j].insert(i);
            }
        }
        if down[top] != full {
            let missing = full.iter().find(|&x| !down[top].contains(x)).unwrap();
            return Err(PosetError::NotBelowTop(missing));
        }
        Ok(Poset {
            n,
            up,
            down,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Every element of the carrier.
    pub fn full(&self) -> ElemSet {
        ElemSet(if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        })
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// All `x` with `a <= x`.
    pub fn up_set(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// All `x` with `x <= a`.
    pub fn down_set(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    /// Common upper bounds of `a`; the whole carrier when `a` is empty.
    pub fn upper_bounds(&self, a: ElemSet) -> ElemSet {
        a.iter()
            .fold(self.full(), |acc, x| acc.intersect(self.up[x]))
    }

    /// Common lower bounds of `a`; the whole carrier when `a` is empty.
    pub fn lower_bounds(&self, a: ElemSet) -> ElemSet {
        a.iter()
            .fold(self.full(), |acc, x| acc.intersect(self.down[x]))
    }

    /// Maximal elements of a nonempty set; always a nonempty antichain.
    pub fn maximal(&self, a: ElemSet) -> Result<ElemSet, EmptySelection> {
        if a.is_empty() {
            return Err(EmptySelection);
        }
        Ok(self.max_in(a))
    }

    /// Minimal elements of a nonempty set; always a nonempty antichain.
    pub fn minimal(&self, a: ElemSet) -> Result<ElemSet, EmptySelection> {
        if a.is_empty() {
            return Err(EmptySelection);
        }
        Ok(self.min_in(a))
    }

    /// `Max a` without the emptiness check; `Max {} = {}`.
    pub(crate) fn max_in(&self, a: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            a.iter()
                .filter(|&x| self.up[x].intersect(a) == ElemSet::singleton(x)),
        )
    }

    /// `Min a` without the emptiness check; `Min {} = {}`.
    pub(crate) fn min_in(&self, a: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            a.iter()
                .filter(|&x| self.down[x].intersect(a) == ElemSet::singleton(x)),
        )
    }

    /// `A leq1 B`: every member of `A` lies below some member of `B`.
    pub fn leq1(&self, a: ElemSet, b: ElemSet) -> bool {
        a.iter().all(|x| !self.up[x].intersect(b).is_empty())
    }

    /// `A leq2 B`: every member of `B` lies above some member of `A`.
    pub fn leq2(&self, a: ElemSet, b: ElemSet) -> bool {
        b.iter().all(|x| !self.down[x].intersect(a).is_empty())
    }

    /// `A sqsub B`: some member of `A` lies below some member of `B`.
    pub fn sqsub(&self, a: ElemSet, b: ElemSet) -> bool {
        a.iter().any(|x| !self.up[x].intersect(b).is_empty())
    }

    /// Mutual `leq1`: the equivalence induced by the `leq1` quasiorder.
    pub fn approx1(&self, a: ElemSet, b: ElemSet) -> bool {
        self.leq1(a, b) && self.leq1(b, a)
    }

    /// Mutual `leq2`: the equivalence induced by the `leq2` quasiorder.
    pub fn approx2(&self, a: ElemSet, b: ElemSet) -> bool {
        self.leq2(a, b) && self.leq2(b, a)
    }

    /// All-pairs comparison: every member of `A` below every member of `B`.
    /// This is the convention used when one side of an inequality is a
    /// single element and the other a set.
    pub fn set_leq(&self, a: ElemSet, b: ElemSet) -> bool {
        a.iter().all(|x| b.is_subset(self.up[x]))
    }

    pub fn is_antichain(&self, a: ElemSet) -> bool {
        a.iter()
            .all(|x| self.up[x].intersect(a) == ElemSet::singleton(x))
    }

    /// True when every pair has a least upper bound and a greatest lower
    /// bound.
    pub fn is_lattice(&self) -> bool {
        for a in 0..self.n {
            for b in a..self.n {
                let pair = ElemSet::from_iter([a, b]);
                if self.min_in(self.upper_bounds(pair)).len() != 1 {
                    return false;
                }
                if self.max_in(self.lower_bounds(pair)).len() != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between, in
    /// canonical order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if x == y {
                    continue;
                }
                let between = self.up[x].intersect(self.down[y]);
                if between.len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}
