//! The partial algebra `(E, +, ', 0, 1)`: axiom verification, the
//! induced order, orthogonality, the derived product, and the set lifts
//! of the partial operations.
//!
//! A [`RawAlgebra`] is the parsed-but-unchecked table; [`RawAlgebra::validate`]
//! either produces an immutable [`EffectAlgebra`] or the first violated
//! axiom with witnesses. The supplement map is always derived from the
//! table (the unique `b` with `a + b = 1`); a declared supplement section
//! is only cross-checked against the derivation.

use crate::poset::{ElemSet, Poset, PosetError, MAX_ELEMENTS};
use thiserror::Error;

/// Unchecked input: a square partial table over named elements.
#[derive(Clone, Debug)]
pub struct RawAlgebra {
    pub ids: Vec<String>,
    /// `plus[a][b]`, `None` for undefined cells.
    pub plus: Vec<Vec<Option<usize>>>,
    pub zero: usize,
    pub one: usize,
    /// Optional declared supplement map, cross-checked against the table.
    pub declared_supplement: Option<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AxiomViolation {
    #[error("carrier has {0} elements, at most {MAX_ELEMENTS} supported")]
    TooManyElements(usize),
    #[error("commutativity fails at {a} + {b}: {a} + {b} = {left} but {b} + {a} = {right}")]
    Commutativity {
        a: String,
        b: String,
        left: String,
        right: String,
    },
    #[error("associativity fails at ({a} + {b}) + {c}: {detail}")]
    Associativity {
        a: String,
        b: String,
        c: String,
        detail: String,
    },
    #[error("supplement fails for {a}: {count} elements x satisfy {a} + x = 1")]
    Supplement { a: String, count: usize },
    #[error("{a} + 1 is defined although {a} is not 0")]
    TopSum { a: String },
    #[error("induced relation is not a bounded partial order: {0}")]
    InducedOrder(String),
    #[error("declared supplement of {a} is {declared}, table derives {derived}")]
    SupplementMismatch {
        a: String,
        declared: String,
        derived: String,
    },
}

/// A validated effect algebra. Immutable; all queries are pure.
#[derive(Clone, Debug)]
pub struct EffectAlgebra {
    ids: Vec<String>,
    plus: Vec<Vec<Option<usize>>>,
    supplement: Vec<usize>,
    zero: usize,
    one: usize,
    poset: Poset,
}

impl RawAlgebra {
    /// Checks the four axioms in order, derives the supplement map, and
    /// builds the induced order, reporting the first failure found.
    #[allow(clippy::needless_range_loop)]
    pub fn validate(self) -> Result<EffectAlgebra, AxiomViolation> {
        let n = self.ids.len();
        if n > MAX_ELEMENTS {
            return Err(AxiomViolation::TooManyElements(n));
        }
        let name = |i: usize| self.ids[i].clone();
        let cell = |v: Option<usize>| match v {
            Some(i) => self.ids[i].clone(),
            None => "undefined".to_string(),
        };
        let plus = &self.plus;

        // Commutativity of definedness and value.
        for a in 0..n {
            for b in 0..n {
                if plus[a][b].is_some() && plus[a][b] != plus[b][a] {
                    return Err(AxiomViolation::Commutativity {
                        a: name(a),
                        b: name(b),
                        left: cell(plus[a][b]),
                        right: cell(plus[b][a]),
                    });
                }
            }
        }
        // Associativity in the partial sense: a+b and (a+b)+c defined
        // forces b+c and a+(b+c) defined with the same value.
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = plus[a][b] else { continue };
                for c in 0..n {
                    let Some(abc) = plus[ab][c] else { continue };
                    let detail = match plus[b][c] {
                        None => Some(format!("{} + {} is undefined", name(b), name(c))),
                        Some(bc) => match plus[a][bc] {
                            None => Some(format!(
                                "{} + ({} + {}) is undefined",
                                name(a),
                                name(b),
                                name(c)
                            )),
                            Some(v) if v != abc => Some(format!(
                                "({} + {}) + {} = {} but {} + ({} + {}) = {}",
                                name(a),
                                name(b),
                                name(c),
                                name(abc),
                                name(a),
                                name(b),
                                name(c),
                                name(v)
                            )),
                            Some(_) => None,
                        },
                    };
                    if let Some(detail) = detail {
                        return Err(AxiomViolation::Associativity {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                            detail,
                        });
                    }
                }
            }
        }
        // Unique supplement.
        let mut supplement = Vec::with_capacity(n);
        for a in 0..n {
            let sups: Vec<usize> = (0..n).filter(|&b| plus[a][b] == Some(self.one)).collect();
            if sups.len() != 1 {
                return Err(AxiomViolation::Supplement {
                    a: name(a),
                    count: sups.len(),
                });
            }
            supplement.push(sups[0]);
        }
        // a + 1 defined only for a = 0.
        for a in 0..n {
            if a != self.zero && plus[a][self.one].is_some() {
                return Err(AxiomViolation::TopSum { a: name(a) });
            }
        }
        // Induced order: a <= b iff some c has a + c = b.
        let poset = Poset::new(n, self.zero, self.one, |a, b| {
            (0..n).any(|c| plus[a][c] == Some(b))
        })
        .map_err(|e| {
            AxiomViolation::InducedOrder(match e {
                PosetError::NotReflexive(x) => format!("no c with {} + c = {}", name(x), name(x)),
                PosetError::NotAntisymmetric(x, y) => {
                    format!("{} <= {} and {} <= {}", name(x), name(y), name(y), name(x))
                }
                PosetError::NotTransitive(x, y, z) => format!(
                    "{} <= {} <= {} but not {} <= {}",
                    name(x),
                    name(y),
                    name(z),
                    name(x),
                    name(z)
                ),
                PosetError::NotAboveBottom(x) => format!("0 is not below {}", name(x)),
                PosetError::NotBelowTop(x) => format!("{} is not below 1", name(x)),
                PosetError::TooManyElements(k) => format!("{k} elements"),
            })
        })?;
        if let Some(declared) = &self.declared_supplement {
            for a in 0..n {
                if declared[a] != supplement[a] {
                    return Err(AxiomViolation::SupplementMismatch {
                        a: name(a),
                        declared: name(declared[a]),
                        derived: name(supplement[a]),
                    });
                }
            }
        }
        Ok(EffectAlgebra {
            ids: self.ids,
            plus: self.plus,
            supplement,
            zero: self.zero,
            one: self.one,
            poset,
        })
    }
}

impl EffectAlgebra {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    /// Index of a named element.
    pub fn lookup(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn full(&self) -> ElemSet {
        self.poset.full()
    }

    /// The partial sum; `None` when undefined.
    pub fn plus(&self, a: usize, b: usize) -> Option<usize> {
        self.plus[a][b]
    }

    /// The unique `b` with `a + b = 1`.
    pub fn supplement(&self, a: usize) -> usize {
        self.supplement[a]
    }

    /// Elementwise supplement of a set.
    pub fn supplement_set(&self, a: ElemSet) -> ElemSet {
        ElemSet::from_iter(a.iter().map(|x| self.supplement[x]))
    }

    /// The induced order `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// `a` and `b` are orthogonal: `a <= b'`. Exactly the definedness
    /// domain of `+`.
    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.leq(a, self.supplement[b])
    }

    /// The derived product `(a' + b')'`, computed from the table on
    /// demand; `None` when undefined.
    pub fn odot(&self, a: usize, b: usize) -> Option<usize> {
        self.plus[self.supplement[a]][self.supplement[b]].map(|s| self.supplement[s])
    }

    pub fn is_lattice(&self) -> bool {
        self.poset.is_lattice()
    }

    /// `A + B`, defined only when every pairwise sum is; the value is the
    /// flattened set of pairwise sums.
    pub fn plus_set(&self, a: ElemSet, b: ElemSet) -> Option<ElemSet> {
        let mut out = ElemSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.plus[x][y]?);
            }
        }
        Some(out)
    }

    /// `A . B`, defined only when every pairwise product is.
    pub fn odot_set(&self, a: ElemSet, b: ElemSet) -> Option<ElemSet> {
        let mut out = ElemSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.odot(x, y)?);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The nine-element non-lattice table, written out longhand so the
    /// algebra tests do not depend on the file parser.
    pub fn nine_element_raw() -> RawAlgebra {
        let ids: Vec<String> = ["0", "a", "b", "c", "d", "c'", "b'", "a'", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        const N: Option<usize> = None;
        let s = |i: usize| Some(i);
        #[rustfmt::skip]
        let plus = vec![
            vec![s(0), s(1), s(2), s(3), s(4), s(5), s(6), s(7), s(8)],
            vec![s(1), N, s(5), s(6), N, N, N, s(8), N],
            vec![s(2), s(5), s(4), s(7), s(6), N, s(8), N, N],
            vec![s(3), s(6), s(7), N, N, s(8), N, N, N],
            vec![s(4), N, s(6), N, s(8), N, N, N, N],
            vec![s(5), N, N, s(8), N, N, N, N, N],
            vec![s(6), N, s(8), N, N, N, N, N, N],
            vec![s(7), s(8), N, N, N, N, N, N, N],
            vec![s(8), N, N, N, N, N, N, N, N],
        ];
        RawAlgebra {
            ids,
            plus,
            zero: 0,
            one: 8,
            declared_supplement: None,
        }
    }

    pub fn nine_element() -> EffectAlgebra {
        nine_element_raw().validate().unwrap()
    }

    pub fn two_element() -> EffectAlgebra {
        RawAlgebra {
            ids: vec!["0".into(), "1".into()],
            plus: vec![vec![Some(0), Some(1)], vec![Some(1), None]],
            zero: 0,
            one: 1,
            declared_supplement: None,
        }
        .validate()
        .unwrap()
    }

    /// The four-element Boolean algebra `{0, x, x', 1}`.
    pub fn four_element_boolean() -> EffectAlgebra {
        const N: Option<usize> = None;
        let s = |i: usize| Some(i);
        #[rustfmt::skip]
        let plus = vec![
            vec![s(0), s(1), s(2), s(3)],
            vec![s(1), N,    s(3), N],
            vec![s(2), s(3), N,    N],
            vec![s(3), N,    N,    N],
        ];
        RawAlgebra {
            ids: vec!["0".into(), "x".into(), "x'".into(), "1".into()],
            plus,
            zero: 0,
            one: 3,
            declared_supplement: None,
        }
        .validate()
        .unwrap()
    }

    #[test]
    fn nine_element_validates_with_expected_supplement() {
        let ea = nine_element();
        let sup: Vec<&str> = (0..9).map(|i| ea.id(ea.supplement(i))).collect();
        assert_eq!(sup, vec!["1", "a'", "b'", "c'", "d", "c", "b", "a", "0"]);
        assert!(!ea.is_lattice());
    }

    #[test]
    fn declared_supplement_is_cross_checked() {
        let mut raw = nine_element_raw();
        raw.declared_supplement = Some(vec![8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert!(raw.clone().validate().is_ok());
        raw.declared_supplement = Some(vec![8, 7, 6, 5, 0, 3, 2, 1, 0]);
        assert_eq!(
            raw.validate().unwrap_err(),
            AxiomViolation::SupplementMismatch {
                a: "d".into(),
                declared: "0".into(),
                derived: "d".into()
            }
        );
    }

    #[test]
    fn two_element_boolean_is_smallest() {
        let ea = two_element();
        assert_eq!(ea.supplement(0), 1);
        assert!(ea.is_lattice());
    }

    #[test]
    fn four_element_boolean_is_a_lattice() {
        assert!(four_element_boolean().is_lattice());
    }

    #[test]
    fn mutated_cell_is_rejected() {
        // a + b changed from c' to b'.
        let mut raw = nine_element_raw();
        raw.plus[1][2] = Some(6);
        assert!(raw.validate().is_err());
    }

    #[test]
    fn induced_order_matches_table() {
        let ea = nine_element();
        let (a, cp, d) = (1, 5, 4);
        assert!(ea.leq(a, cp)); // a + b = c'
        assert!(ea.leq(a, a));
        assert!(!ea.leq(a, d));
    }

    #[test]
    fn orthogonality_is_the_definedness_domain() {
        let ea = nine_element();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(ea.orthogonal(a, b), ea.plus(a, b).is_some(), "{a} {b}");
            }
            assert!(ea.orthogonal(a, ea.supplement(a)));
        }
        assert!(ea.orthogonal(1, 2)); // a + b = c'
        assert!(!ea.orthogonal(1, 1)); // a + a undefined
    }

    #[test]
    fn odot_spot_values() {
        let ea = nine_element();
        let (a, b, d, cp, bp) = (1, 2, 4, 5, 6);
        assert_eq!(ea.odot(bp, d), Some(b));
        assert_eq!(ea.odot(cp, bp), Some(a));
        for x in 0..9 {
            assert_eq!(ea.odot(x, ea.one()), Some(x));
            assert_eq!(ea.plus(x, ea.zero()), Some(x));
        }
    }

    #[test]
    fn set_lifted_operations() {
        let ea = nine_element();
        let (a, b, d) = (1, 2, 4);
        // a + d undefined, so {a} + {b, d} is undefined.
        assert_eq!(
            ea.plus_set(ElemSet::singleton(a), ElemSet::from_iter([b, d])),
            None
        );
        let any = ElemSet::from_iter([a, b, d]);
        assert_eq!(ea.plus_set(ElemSet::singleton(ea.zero()), any), Some(any));
        assert_eq!(
            ea.odot_set(ElemSet::from_iter([a, b]), ElemSet::singleton(ea.one())),
            Some(ElemSet::from_iter([a, b]))
        );
    }
}
