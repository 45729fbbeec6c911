//! The three implications and the adjoint conjunction.
//!
//! `imp_arrow` and `imp_double` are everywhere-defined but set-valued:
//! their results are nonempty antichains. `imp_squig` is single-valued
//! but partial. `otimes` is the conjunction adjoint to `imp_double`
//! under the `sqsub` comparison. All four are computed on demand from
//! the sum table, the supplement map, and the induced order.

use crate::algebra::EffectAlgebra;
use crate::poset::ElemSet;

/// Witness that one of the two complement identities linking `otimes`
/// and `imp_double` fails at a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityFailure {
    pub a: usize,
    pub b: usize,
    /// Which identity broke: `*`-from-`=>` or `=>`-from-`*`.
    pub identity: &'static str,
}

impl EffectAlgebra {
    /// `b -> c`: the maximal `x` whose product with `b` is defined and
    /// lies below `c`. Total; the result is a nonempty antichain.
    pub fn imp_arrow(&self, b: usize, c: usize) -> ElemSet {
        let candidates = ElemSet::from_iter(
            (0..self.len()).filter(|&x| self.odot(x, b).is_some_and(|v| self.leq(v, c))),
        );
        self.poset().max_in(candidates)
    }

    /// `b ~> c`: `b' + c`, defined exactly when `c <= b`.
    pub fn imp_squig(&self, b: usize, c: usize) -> Option<usize> {
        self.plus(self.supplement(b), c)
    }

    /// `b => c`: `b'` added to each maximal common lower bound of `b`
    /// and `c`. Total; every summand is defined because the lower bound
    /// lies below `b`.
    pub fn imp_double(&self, b: usize, c: usize) -> ElemSet {
        let pair = ElemSet::from_iter([b, c]);
        let meets = self.poset().max_in(self.poset().lower_bounds(pair));
        let bp = self.supplement(b);
        ElemSet::from_iter(meets.iter().map(|m| {
            self.plus(bp, m)
                .expect("m <= b forces b' + m to be defined in a valid algebra")
        }))
    }

    /// `a * b`: each minimal common upper bound of `a` and `b'`,
    /// multiplied by `b`. Total; every product is defined because the
    /// upper bound lies above `b'`.
    pub fn otimes(&self, a: usize, b: usize) -> ElemSet {
        let pair = ElemSet::from_iter([a, self.supplement(b)]);
        let joins = self.poset().min_in(self.poset().upper_bounds(pair));
        ElemSet::from_iter(joins.iter().map(|u| {
            self.odot(u, b)
                .expect("b' <= u forces u . b to be defined in a valid algebra")
        }))
    }

    /// `A * B`: the union of all pairwise results, flattened to one set.
    pub fn otimes_set(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.otimes(x, y));
            }
        }
        out
    }

    /// `A => B`: the union of all pairwise results, flattened to one set.
    pub fn imp_double_set(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.imp_double(x, y));
            }
        }
        out
    }

    /// Checks `a * b = (b => a')'` and `a => b = (b' * a)'` over every
    /// pair, returning the first failing pair if any.
    pub fn duality_witness(&self) -> Option<DualityFailure> {
        for a in 0..self.len() {
            for b in 0..self.len() {
                let from_imp = self.supplement_set(self.imp_double(b, self.supplement(a)));
                if self.otimes(a, b) != from_imp {
                    return Some(DualityFailure {
                        a,
                        b,
                        identity: "* from =>",
                    });
                }
                let from_otimes = self.supplement_set(self.otimes(self.supplement(b), a));
                if self.imp_double(a, b) != from_otimes {
                    return Some(DualityFailure {
                        a,
                        b,
                        identity: "=> from *",
                    });
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{nine_element, two_element};

    // Index aliases: 0 a b c d c' b' a' 1.
    const A: usize = 1;
    const B: usize = 2;
    const C: usize = 3;
    const D: usize = 4;
    const CP: usize = 5;
    const BP: usize = 6;
    const AP: usize = 7;
    const ONE: usize = 8;

    #[test]
    fn imp_arrow_spot_values() {
        let ea = nine_element();
        assert_eq!(ea.imp_arrow(CP, BP), ElemSet::from_iter([BP, AP]));
        assert_eq!(ea.imp_arrow(BP, AP), ElemSet::from_iter([D, AP]));
        for a in 0..9 {
            assert_eq!(ea.imp_arrow(a, 0), ElemSet::singleton(ea.supplement(a)));
            assert_eq!(ea.imp_arrow(ONE, a), ElemSet::singleton(a));
        }
    }

    #[test]
    fn imp_squig_spot_values() {
        let ea = nine_element();
        assert_eq!(ea.imp_squig(CP, B), Some(AP));
        assert_eq!(ea.imp_squig(A, B), None); // b is not below a
        for a in 0..9 {
            assert_eq!(ea.imp_squig(a, 0), Some(ea.supplement(a)));
            assert_eq!(ea.imp_squig(ONE, a), Some(a));
        }
    }

    #[test]
    fn imp_double_spot_values() {
        let ea = nine_element();
        assert_eq!(ea.imp_double(BP, CP), ElemSet::from_iter([D, CP]));
        assert_eq!(ea.imp_double(AP, BP), ElemSet::from_iter([BP, CP]));
        for a in 0..9 {
            assert_eq!(ea.imp_double(a, 0), ElemSet::singleton(ea.supplement(a)));
            assert_eq!(ea.imp_double(ONE, a), ElemSet::singleton(a));
        }
    }

    #[test]
    fn otimes_spot_values() {
        let ea = nine_element();
        assert_eq!(ea.otimes(A, BP), ElemSet::from_iter([A, D]));
        assert_eq!(ea.otimes(B, AP), ElemSet::from_iter([B, C]));
        for a in 0..9 {
            assert_eq!(ea.otimes(a, ONE), ElemSet::singleton(a));
            assert_eq!(ea.otimes(ONE, a), ElemSet::singleton(a));
        }
    }

    #[test]
    fn set_lifts_flatten() {
        let ea = nine_element();
        assert_eq!(
            ea.otimes_set(ElemSet::from_iter([CP, BP]), ElemSet::singleton(BP)),
            ElemSet::from_iter([A, D])
        );
        assert_eq!(
            ea.imp_double_set(ElemSet::singleton(AP), ElemSet::from_iter([BP, CP])),
            ElemSet::from_iter([BP, CP])
        );
        assert_eq!(
            ea.otimes_set(ElemSet::singleton(A), ElemSet::singleton(ONE)),
            ElemSet::singleton(A)
        );
    }

    #[test]
    fn duality_holds_on_fixtures() {
        assert_eq!(nine_element().duality_witness(), None);
        assert_eq!(two_element().duality_witness(), None);
    }

    #[test]
    fn results_are_antichains() {
        let ea = nine_element();
        for a in 0..9 {
            for b in 0..9 {
                assert!(ea.poset().is_antichain(ea.imp_arrow(a, b)));
                assert!(ea.poset().is_antichain(ea.imp_double(a, b)));
                assert!(ea.poset().is_antichain(ea.otimes(a, b)));
                assert!(!ea.imp_arrow(a, b).is_empty());
                assert!(!ea.imp_double(a, b).is_empty());
                assert!(!ea.otimes(a, b).is_empty());
            }
        }
    }
}
