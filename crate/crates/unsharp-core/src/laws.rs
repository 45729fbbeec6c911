//! The executable law suite.
//!
//! Every lemma and theorem of the underlying theory is one named check
//! that either sweeps its whole case space (when it fits the budget) or
//! a seeded sample of it. Checks never guess: a failing case is
//! reported with a concrete witness, and laws that only hold under a
//! side condition are gated on that condition instead of being weakened.

use crate::algebra::EffectAlgebra;
use crate::induction;
use crate::poset::ElemSet;
use crate::render;
use crate::tense::{
    self, phi_capped, Proposition, PropositionFamily, SetProposition, TenseError, TenseOp,
    TimeFrame, ALL_TENSE_OPS,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Budgets and the sampling seed shared by every suite.
///
/// `exhaustive_cap` bounds proposition sweeps (`|E| ^ |T|`), `set_cap`
/// bounds subset sweeps, and `pair_cap` bounds quadratic subset sweeps;
/// beyond a cap the suite draws `sample_size` seeded cases instead and
/// marks the check as sampled.
#[derive(Clone, Debug)]
pub struct LawConfig {
    pub seed: u64,
    pub exhaustive_cap: u64,
    pub set_cap: u64,
    pub pair_cap: u64,
    pub sample_size: u64,
    /// Grid side for tense-compatibility hypothesis sweeps.
    pub hypothesis_samples: usize,
    /// Selection-family blow-up guard.
    pub selection_cap: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            seed: 0,
            exhaustive_cap: 10_000,
            set_cap: 4_096,
            pair_cap: 300_000,
            sample_size: 1_024,
            hypothesis_samples: 12,
            selection_cap: tense::DEFAULT_SELECTION_CAP,
        }
    }
}

impl LawConfig {
    /// A deterministic stream per check, independent of check order.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass {
        cases: u64,
        sampled: bool,
        note: Option<String>,
    },
    Fail {
        cases: u64,
        witness: String,
    },
    Skip {
        reason: String,
    },
}

/// One named law with its verification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
}

impl Check {
    pub fn pass(id: impl Into<String>, cases: u64, sampled: bool) -> Check {
        Check {
            id: id.into(),
            status: Status::Pass {
                cases,
                sampled,
                note: None,
            },
        }
    }

    pub fn fail(id: impl Into<String>, cases: u64, witness: String) -> Check {
        Check {
            id: id.into(),
            status: Status::Fail { cases, witness },
        }
    }

    pub fn skip(id: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            id: id.into(),
            status: Status::Skip {
                reason: reason.into(),
            },
        }
    }

    pub fn outcome(
        id: impl Into<String>,
        ok: bool,
        cases: u64,
        sampled: bool,
        witness: impl FnOnce() -> String,
    ) -> Check {
        if ok {
            Check::pass(id, cases, sampled)
        } else {
            Check::fail(id, cases, witness())
        }
    }

    /// Not a failure (passes and skips both count).
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail { .. })
    }
}

/// An ordered collection of checks with summary counters.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Pass { .. }))
            .count()
    }

    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail { .. }))
            .count()
    }

    pub fn skipped(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Skip { .. }))
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Case sweep helper: exhaustively checks `total` cases through `f`,
/// stopping at the first failure. `f` returns a witness on failure.
fn sweep(id: &str, total: impl Iterator<Item = Option<String>>, sampled: bool) -> Check {
    let mut cases = 0u64;
    for outcome in total {
        cases += 1;
        if let Some(witness) = outcome {
            return Check::fail(id, cases, witness);
        }
    }
    Check::pass(id, cases, sampled)
}

/// Nonempty subsets of the carrier, exhaustive or sampled.
fn subset_pool(ea: &EffectAlgebra, cfg: &LawConfig, salt: u64) -> (Vec<ElemSet>, bool) {
    let full = ea.full().0;
    if full <= cfg.set_cap {
        ((1..=full).map(ElemSet).collect(), false)
    } else {
        let mut rng = cfg.rng(salt);
        let pool = (0..cfg.sample_size)
            .map(|_| loop {
                let m = rng.gen::<u64>() & full;
                if m != 0 {
                    break ElemSet(m);
                }
            })
            .collect();
        (pool, true)
    }
}

/// Set-level order machinery: antichain shape of extrema, the subset
/// bounds remark, and the quasiorder/compatibility laws of the
/// comparison relations.
pub fn check_poset_laws(ea: &EffectAlgebra, cfg: &LawConfig) -> Vec<Check> {
    let poset = ea.poset();
    let label = |s: ElemSet| render::set_label(ea, s);
    let mut checks = Vec::new();

    let (pool, sampled) = subset_pool(ea, cfg, 0x01);
    checks.push(sweep(
        "poset.extrema-antichain",
        pool.iter().map(|&a| {
            let max = poset.maximal(a).unwrap();
            let min = poset.minimal(a).unwrap();
            (!(poset.is_antichain(max)
                && poset.is_antichain(min)
                && !max.is_empty()
                && !min.is_empty()
                && poset.leq1(a, max)
                && poset.leq2(min, a)))
            .then(|| format!("extrema of {} misbehave", label(a)))
        }),
        sampled,
    ));

    // Subsets are bounded by the extrema of their supersets.
    let full = ea.full().0;
    let pairs_exhaustive = 3u128.pow(ea.len() as u32) <= cfg.pair_cap as u128;
    let check_pair = |b: ElemSet, c: ElemSet| -> Option<String> {
        (!(poset.leq1(b, poset.max_in(c)) && poset.leq2(poset.min_in(c), b)))
            .then(|| format!("{} within {}", label(b), label(c)))
    };
    checks.push(if pairs_exhaustive {
        sweep(
            "poset.subset-bounds",
            (1..=full).flat_map(|c| {
                // Enumerate nonempty submasks of c.
                let mut subs = Vec::new();
                let mut b = c;
                loop {
                    subs.push(check_pair(ElemSet(b), ElemSet(c)));
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & c;
                }
                subs.pop(); // drop the empty submask
                subs
            }),
            false,
        )
    } else {
        let mut rng = cfg.rng(0x02);
        sweep(
            "poset.subset-bounds",
            (0..cfg.sample_size).map(|_| {
                let c = loop {
                    let m = rng.gen::<u64>() & full;
                    if m != 0 {
                        break m;
                    }
                };
                let b = loop {
                    let m = rng.gen::<u64>() & c;
                    if m != 0 {
                        break m;
                    }
                };
                check_pair(ElemSet(b), ElemSet(c))
            }),
            true,
        )
    });

    // Reflexivity of the three comparisons on every nonempty subset.
    checks.push(sweep(
        "poset.comparisons-reflexive",
        pool.iter().map(|&a| {
            (!(poset.leq1(a, a) && poset.leq2(a, a) && poset.sqsub(a, a)))
                .then(|| format!("reflexivity fails at {}", label(a)))
        }),
        sampled,
    ));

    // Transitivity of the two quasiorders, and sqsub being implied by
    // either, on subset pairs/triples.
    let (pairs, pairs_sampled) = {
        let total = (full as u128) * (full as u128);
        if total <= cfg.pair_cap as u128 {
            let mut v = Vec::with_capacity(total as usize);
            for a in 1..=full {
                for b in 1..=full {
                    v.push((ElemSet(a), ElemSet(b)));
                }
            }
            (v, false)
        } else {
            let mut rng = cfg.rng(0x03);
            let draw = |rng: &mut ChaCha8Rng| loop {
                let m = rng.gen::<u64>() & full;
                if m != 0 {
                    break ElemSet(m);
                }
            };
            (
                (0..cfg.sample_size)
                    .map(|_| (draw(&mut rng), draw(&mut rng)))
                    .collect(),
                true,
            )
        }
    };
    checks.push(sweep(
        "poset.sqsub-implied",
        pairs.iter().map(|&(a, b)| {
            let ok = (!poset.leq1(a, b) || poset.sqsub(a, b))
                && (!poset.leq2(a, b) || poset.sqsub(a, b));
            (!ok).then(|| format!("{} vs {}", label(a), label(b)))
        }),
        pairs_sampled,
    ));
    let mut rng = cfg.rng(0x04);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let m = rng.gen::<u64>() & full;
        if m != 0 {
            break ElemSet(m);
        }
    };
    checks.push(sweep(
        "poset.comparisons-transitive",
        (0..cfg.sample_size).map(|_| {
            let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let ok = (!(poset.leq1(a, b) && poset.leq1(b, c)) || poset.leq1(a, c))
                && (!(poset.leq2(a, b) && poset.leq2(b, c)) || poset.leq2(a, c));
            (!ok).then(|| format!("{} / {} / {}", label(a), label(b), label(c)))
        }),
        true,
    ));
    checks
}

/// The elementary consequences of the axioms: units, supplement laws,
/// compatibility of the order with both partial operations, and
/// cancellation.
pub fn check_lemma3(ea: &EffectAlgebra) -> Vec<Check> {
    let n = ea.len();
    let name = |i: usize| ea.id(i).to_string();
    let elems = || 0..n;
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples =
        || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    let mut checks = Vec::new();

    checks.push(sweep(
        "lemma3.ii",
        elems().map(|a| {
            (!(ea.plus(a, ea.zero()) == Some(a) && ea.odot(a, ea.one()) == Some(a)))
                .then(|| format!("units fail at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.iii",
        elems().map(|a| {
            let s = ea.supplement(a);
            (!(ea.plus(a, s) == Some(ea.one()) && ea.odot(a, s) == Some(ea.zero())))
                .then(|| format!("supplement laws fail at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.iv",
        pairs().map(|(a, b)| {
            let sum_ok = ea.plus(a, b).is_none_or(|s| ea.leq(a, s) && ea.leq(b, s));
            let prod_ok = ea.odot(a, b).is_none_or(|p| ea.leq(p, a) && ea.leq(p, b));
            (!(sum_ok && prod_ok)).then(|| format!("bounds fail at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.v",
        pairs().map(|(a, b)| {
            if !ea.leq(a, b) {
                return None;
            }
            let ok = ea
                .plus(a, ea.supplement(b))
                .and_then(|x| ea.odot(b, x))
                .is_some_and(|v| v == a);
            (!ok).then(|| format!("a = b.(a+b') fails at a={}, b={}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.vi",
        pairs().map(|(a, b)| {
            if !ea.leq(a, b) {
                return None;
            }
            let via_odot = ea
                .odot(ea.supplement(a), b)
                .and_then(|x| ea.plus(a, x))
                .is_some_and(|v| v == b);
            let via_plus = ea
                .plus(a, ea.supplement(b))
                .map(|x| ea.supplement(x))
                .and_then(|x| ea.plus(a, x))
                .is_some_and(|v| v == b);
            (!(via_odot && via_plus))
                .then(|| format!("b = a+(a'.b) fails at a={}, b={}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.vii",
        triples().map(|(a, b, c)| {
            if !ea.leq(a, b) {
                return None;
            }
            let bc = ea.plus(b, c)?;
            let ok = ea.plus(a, c).is_some_and(|ac| ea.leq(ac, bc));
            (!ok).then(|| {
                format!(
                    "sum monotone fails at {}, {}, {}",
                    name(a),
                    name(b),
                    name(c)
                )
            })
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.viii",
        triples().map(|(a, b, c)| {
            if !ea.leq(a, b) {
                return None;
            }
            let ac = ea.odot(a, c)?;
            let ok = ea.odot(b, c).is_some_and(|bc| ea.leq(ac, bc));
            (!ok).then(|| {
                format!(
                    "product monotone fails at {}, {}, {}",
                    name(a),
                    name(b),
                    name(c)
                )
            })
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.ix",
        triples().map(|(a, b, c)| match (ea.plus(a, b), ea.plus(a, c)) {
            (Some(x), Some(y)) if x == y && b != c => Some(format!(
                "sum cancellation fails at {}, {}, {}",
                name(a),
                name(b),
                name(c)
            )),
            _ => None,
        }),
        false,
    ));
    checks.push(sweep(
        "lemma3.x",
        triples().map(|(a, b, c)| match (ea.odot(a, b), ea.odot(a, c)) {
            (Some(x), Some(y)) if x == y && b != c => Some(format!(
                "product cancellation fails at {}, {}, {}",
                name(a),
                name(b),
                name(c)
            )),
            _ => None,
        }),
        false,
    ));
    checks.push(sweep(
        "algebra.involution",
        elems().map(|a| {
            (ea.supplement(ea.supplement(a)) != a).then(|| format!("a'' != a at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "algebra.antitone",
        pairs().map(|(a, b)| {
            (ea.leq(a, b) && !ea.leq(ea.supplement(b), ea.supplement(a)))
                .then(|| format!("antitone fails at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "algebra.orthogonality",
        pairs().map(|(a, b)| {
            (ea.orthogonal(a, b) != ea.plus(a, b).is_some()).then(|| {
                format!(
                    "orthogonality/definedness mismatch at {}, {}",
                    name(a),
                    name(b)
                )
            })
        }),
        false,
    ));
    checks
}

/// Laws of the three implications and the conjunction, exhaustively
/// over element pairs and triples.
pub fn check_connective_laws(ea: &EffectAlgebra) -> Vec<Check> {
    let n = ea.len();
    let poset = ea.poset();
    let name = |i: usize| ea.id(i).to_string();
    let single = ElemSet::singleton;
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples =
        || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    let mut checks = Vec::new();
    let top = single(ea.one());

    checks.push(sweep(
        "lemma1.i",
        pairs().map(|(a, b)| {
            let v = ea.imp_arrow(a, b);
            (!(poset.leq1(single(ea.supplement(a)), v) && !v.is_empty()))
                .then(|| format!("at {} -> {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma1.ii",
        (0..n).map(|a| {
            (!(ea.imp_arrow(a, ea.zero()) == single(ea.supplement(a))
                && ea.imp_arrow(ea.one(), a) == single(a)))
            .then(|| format!("at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma1.iii",
        pairs().map(|(a, b)| {
            ((ea.imp_arrow(a, b) == top) != ea.leq(a, b))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma1.iv",
        triples().map(|(a, b, c)| {
            (ea.leq(a, b) && !poset.leq1(ea.imp_arrow(c, a), ea.imp_arrow(c, b)))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "theorem1.adjointness",
        triples().map(|(a, b, c)| {
            let ab = ea.odot(a, b)?;
            (ea.leq(ab, c) != poset.leq1(single(a), ea.imp_arrow(b, c)))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma2.i",
        pairs().map(|(a, b)| {
            let ok = ea
                .imp_arrow(a, b)
                .iter()
                .all(|x| ea.odot(x, a).is_some_and(|v| ea.leq(v, b)));
            (!ok).then(|| format!("modus ponens fails at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma2.ii",
        pairs().map(|(a, b)| {
            let ab = ea.odot(a, b)?;
            (!poset.leq1(single(a), ea.imp_arrow(b, ab)))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    // The divisibility remark attached to modus ponens: the products of
    // the implication members against the antecedent stay leq1-below
    // the maximal common lower bounds.
    checks.push(sweep(
        "divisibility.arrow",
        pairs().map(|(a, b)| {
            let products =
                ElemSet::from_iter(ea.imp_arrow(a, b).iter().filter_map(|x| ea.odot(x, a)));
            let meets = poset.max_in(poset.lower_bounds(ElemSet::from_iter([a, b])));
            (!poset.leq1(products, meets)).then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma4.i",
        pairs().map(|(a, b)| {
            let v = ea.imp_squig(a, b)?;
            (!ea.leq(ea.supplement(a), v)).then(|| format!("at {} ~> {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma4.ii",
        (0..n).map(|a| {
            (!(ea.imp_squig(a, ea.zero()) == Some(ea.supplement(a))
                && ea.imp_squig(ea.one(), a) == Some(a)))
            .then(|| format!("at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma4.iii",
        pairs().map(|(a, b)| {
            ((ea.imp_squig(a, b) == Some(ea.one())) != (a == b))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma4.iv",
        triples().map(|(a, b, c)| {
            if !ea.leq(a, b) {
                return None;
            }
            let cb = ea.imp_squig(c, b)?;
            let ok = ea.imp_squig(c, a).is_some_and(|ca| ea.leq(ca, cb));
            (!ok).then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "theorem2.squig-arrow",
        pairs().map(|(a, b)| {
            let v = ea.imp_squig(a, b)?;
            (ea.imp_arrow(a, b) != single(v)).then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "squig.adjointness",
        triples().map(|(a, b, c)| {
            let (Some(ab), Some(bc)) = (ea.odot(a, b), ea.imp_squig(b, c)) else {
                return None;
            };
            (ea.leq(ab, c) != ea.leq(a, bc))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma5.i",
        pairs().map(|(a, b)| {
            let v = ea.imp_double(a, b);
            (!(poset.set_leq(single(ea.supplement(a)), v) && !v.is_empty()))
                .then(|| format!("at {} => {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma5.ii",
        (0..n).map(|a| {
            (!(ea.imp_double(a, ea.zero()) == single(ea.supplement(a))
                && ea.imp_double(ea.one(), a) == single(a)))
            .then(|| format!("at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma5.iii",
        pairs().map(|(a, b)| {
            ((ea.imp_double(a, b) == top) != ea.leq(a, b))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma5.iv",
        triples().map(|(a, b, c)| {
            (ea.leq(a, b) && !poset.leq1(ea.imp_double(c, a), ea.imp_double(c, b)))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "comparison.i",
        pairs().map(|(a, b)| {
            (!poset.leq1(ea.imp_double(a, b), ea.imp_arrow(a, b)))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "comparison.ii",
        pairs().map(|(a, b)| {
            let v = ea.imp_squig(a, b)?;
            (!(ea.imp_arrow(a, b) == single(v) && ea.imp_double(a, b) == single(v)))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "otimes.i",
        pairs().map(|(a, b)| {
            let v = ea.otimes(a, b);
            (!(!v.is_empty() && poset.set_leq(v, single(b))))
                .then(|| format!("at {} * {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "otimes.ii",
        (0..n).map(|a| {
            (!(ea.otimes(a, ea.one()) == single(a) && ea.otimes(ea.one(), a) == single(a)))
                .then(|| format!("at {}", name(a)))
        }),
        false,
    ));
    checks.push(sweep(
        "otimes.iii",
        pairs().map(|(a, b)| {
            ((ea.otimes(a, b) == single(ea.zero())) != ea.orthogonal(a, b))
                .then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "otimes.iv",
        triples().map(|(a, b, c)| {
            (ea.leq(a, b) && !poset.leq2(ea.otimes(a, c), ea.otimes(b, c)))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "adjoint.otimes-imp",
        triples().map(|(a, b, c)| {
            (poset.sqsub(ea.otimes(a, b), single(c)) != poset.sqsub(single(a), ea.imp_double(b, c)))
                .then(|| format!("at {}, {}, {}", name(a), name(b), name(c)))
        }),
        false,
    ));
    checks.push(sweep(
        "divisibility.imp-double",
        pairs().map(|(a, b)| {
            let lhs = ea.otimes_set(ea.imp_double(a, b), single(a));
            let meets = poset.max_in(poset.lower_bounds(ElemSet::from_iter([a, b])));
            (lhs != meets).then(|| {
                format!(
                    "(a=>b)*a = {} differs from Max L(a,b) = {} at a={}, b={}",
                    render::set_label(ea, lhs),
                    render::set_label(ea, meets),
                    name(a),
                    name(b)
                )
            })
        }),
        false,
    ));
    checks.push(match ea.duality_witness() {
        None => Check::pass("duality.identities", (n * n) as u64, false),
        Some(w) => Check::fail(
            "duality.identities",
            (n * n) as u64,
            format!("{} fails at {}, {}", w.identity, name(w.a), name(w.b)),
        ),
    });
    checks.push(sweep(
        "lemma6.i",
        pairs().map(|(a, b)| {
            let v = ea.imp_double_set(single(b), ea.otimes(a, b));
            (!poset.leq1(single(a), v)).then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks.push(sweep(
        "lemma6.ii",
        pairs().map(|(a, b)| {
            let v = ea.otimes_set(ea.imp_double(a, b), single(a));
            (!poset.leq1(v, single(b))).then(|| format!("at {}, {}", name(a), name(b)))
        }),
        false,
    ));
    checks
}

/// The set-level adjointness between the lifted conjunction and
/// implication, over seeded subset triples (or the whole cube when it
/// fits the budget).
pub fn check_lemma8(ea: &EffectAlgebra, cfg: &LawConfig) -> Check {
    let poset = ea.poset();
    let full = ea.full().0;
    let case = |a: ElemSet, b: ElemSet, c: ElemSet| -> Option<String> {
        (poset.sqsub(ea.otimes_set(a, b), c) != poset.sqsub(a, ea.imp_double_set(b, c))).then(
            || {
                format!(
                    "at A={}, B={}, C={}",
                    render::set_label(ea, a),
                    render::set_label(ea, b),
                    render::set_label(ea, c)
                )
            },
        )
    };
    let total = (full as u128).pow(3);
    if total <= cfg.set_cap as u128 {
        sweep(
            "lemma8.set-adjointness",
            (1..=full).flat_map(|a| {
                (1..=full).flat_map(move |b| {
                    (1..=full).map(move |c| case(ElemSet(a), ElemSet(b), ElemSet(c)))
                })
            }),
            false,
        )
    } else {
        let mut rng = cfg.rng(0x08);
        let mut draw = move || loop {
            let m = rng.gen::<u64>() & full;
            if m != 0 {
                break ElemSet(m);
            }
        };
        sweep(
            "lemma8.set-adjointness",
            (0..cfg.sample_size.max(1000)).map(|_| case(draw(), draw(), draw())),
            true,
        )
    }
}

/// Laws of the selection function and of the frame-induced operators on
/// families: injectivity, the singleton case, the order embedding, the
/// segment-union formulas, duality, monotonicity, and the
/// universal-below-existential bounds.
pub fn check_transformation_laws(
    ea: &EffectAlgebra,
    frame: &TimeFrame,
    cfg: &LawConfig,
) -> Result<Vec<Check>, TenseError> {
    frame.require_serial()?;
    let poset = ea.poset();
    let full = ea.full().0;
    let mut checks = Vec::new();

    let mut rng = cfg.rng(0x11);
    let draw_set = |rng: &mut ChaCha8Rng| loop {
        let m = rng.gen::<u64>() & full;
        if m != 0 {
            break ElemSet(m);
        }
    };
    let draw_setprop = |rng: &mut ChaCha8Rng| {
        SetProposition::new((0..frame.len()).map(|_| draw_set(rng)).collect())
    };

    // Injectivity and the order embedding of the selection function.
    let mut witness = None;
    let mut cases = 0u64;
    for _ in 0..cfg.sample_size {
        let x = draw_setprop(&mut rng);
        let y = if rng.gen_bool(0.5) {
            draw_setprop(&mut rng)
        } else {
            // A comparable partner: pointwise subsets of the common
            // upper bounds, so x set_leq y by construction.
            SetProposition::new(
                (0..frame.len())
                    .map(|t| {
                        let ub = poset.upper_bounds(x.value(t));
                        loop {
                            let m = rng.gen::<u64>() & ub.0;
                            if m != 0 {
                                break ElemSet(m);
                            }
                        }
                    })
                    .collect(),
            )
        };
        cases += 1;
        let fx = phi_capped(ea, &x, cfg.selection_cap)?;
        let fy = phi_capped(ea, &y, cfg.selection_cap)?;
        if (x == y) != (fx == fy) {
            witness = Some("selection families collide".to_string());
            break;
        }
        if x.set_leq(ea, &y) != fx.set_leq(ea, &fy) {
            witness = Some(format!(
                "order embedding fails at x={}, y={}",
                render::set_prop_label(ea, &x),
                render::set_prop_label(ea, &y)
            ));
            break;
        }
    }
    checks.push(match witness {
        None => Check::pass("phi.injective-embedding", cases, true),
        Some(w) => Check::fail("phi.injective-embedding", cases, w),
    });

    // Pointwise singletons select exactly the original proposition.
    let (pool, sampled) = tense::proposition_pool(ea, frame, cfg, 0x12);
    checks.push(sweep(
        "phi.singleton",
        pool.iter().map(|p| {
            let fam = phi_capped(ea, &SetProposition::of(p), cfg.selection_cap).unwrap();
            (fam != PropositionFamily::singleton(p.clone()))
                .then(|| format!("at {}", render::prop_label(ea, p)))
        }),
        sampled,
    ));

    // Operators on a selection family equal the bounds of the pointwise
    // unions over the segment.
    let mut rng = cfg.rng(0x13);
    checks.push(sweep(
        "tense.segment-union",
        (0..cfg.sample_size).map(|_| {
            let x = draw_setprop(&mut rng);
            let fam = match phi_capped(ea, &x, cfg.selection_cap) {
                Ok(f) => f,
                Err(e) => return Some(format!("selection overflow: {e}")),
            };
            for op in ALL_TENSE_OPS {
                let via_family = tense::apply(ea, frame, op, &fam).unwrap();
                for s in 0..frame.len() {
                    let seg = if op.looks_back() {
                        frame.predecessors(s)
                    } else {
                        frame.successors(s)
                    };
                    let mut union = ElemSet::EMPTY;
                    for t in seg.iter() {
                        union = union.union(x.value(t));
                    }
                    if via_family.value(s) != tense::bound_of(ea, op, union) {
                        return Some(format!(
                            "{} differs from its segment-union form at x={}",
                            op.name(),
                            render::set_prop_label(ea, &x)
                        ));
                    }
                }
            }
            None
        }),
        true,
    ));

    // Family-level checks: duality, monotonicity, universal below
    // existential.
    let mut rng = cfg.rng(0x14);
    let draw_family = |rng: &mut ChaCha8Rng, pool: &[Proposition]| {
        let size = rng.gen_range(1..=3usize);
        PropositionFamily::new(
            (0..size)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect(),
        )
    };
    let apply_op = |op: TenseOp, fam: &PropositionFamily| tense::apply(ea, frame, op, fam).unwrap();

    checks.push(sweep(
        "tense.duality",
        (0..cfg.sample_size).map(|_| {
            let fam = draw_family(&mut rng, &pool);
            let h = apply_op(TenseOp::H, &fam);
            let g = apply_op(TenseOp::G, &fam);
            let p_dual = apply_op(TenseOp::P, &fam.complement(ea)).complement(ea);
            let f_dual = apply_op(TenseOp::F, &fam.complement(ea)).complement(ea);
            (!(h == p_dual && g == f_dual)).then(|| "H/G differ from their P/F duals".to_string())
        }),
        true,
    ));

    let mut rng = cfg.rng(0x15);
    checks.push(sweep(
        "tense.monotone",
        (0..cfg.sample_size).map(|_| {
            let a = draw_family(&mut rng, &pool);
            // Build b memberwise above every member of a.
            let members: Vec<Proposition> = (0..rng.gen_range(1..=3usize))
                .map(|_| {
                    Proposition::new(
                        (0..frame.len())
                            .map(|t| {
                                let ub = poset.upper_bounds(ElemSet::from_iter(
                                    a.members().iter().map(|p| p.value(t)),
                                ));
                                let pick = rng.gen_range(0..ub.len().max(1));
                                ub.iter().nth(pick).unwrap_or(ea.one())
                            })
                            .collect(),
                    )
                })
                .collect();
            let b = PropositionFamily::new(members);
            if !a.set_leq(ea, &b) {
                return Some("constructed pair is not comparable".to_string());
            }
            for s in 0..frame.len() {
                let ok = poset.leq2(
                    apply_op(TenseOp::P, &a).value(s),
                    apply_op(TenseOp::P, &b).value(s),
                ) && poset.leq2(
                    apply_op(TenseOp::F, &a).value(s),
                    apply_op(TenseOp::F, &b).value(s),
                ) && poset.leq1(
                    apply_op(TenseOp::H, &a).value(s),
                    apply_op(TenseOp::H, &b).value(s),
                ) && poset.leq1(
                    apply_op(TenseOp::G, &a).value(s),
                    apply_op(TenseOp::G, &b).value(s),
                );
                if !ok {
                    return Some("monotonicity fails".to_string());
                }
            }
            None
        }),
        true,
    ));

    let mut rng = cfg.rng(0x16);
    checks.push(sweep(
        "tense.universal-below-existential",
        (0..cfg.sample_size).map(|_| {
            let fam = draw_family(&mut rng, &pool);
            let ok = apply_op(TenseOp::H, &fam).set_leq(ea, &apply_op(TenseOp::P, &fam))
                && apply_op(TenseOp::G, &fam).set_leq(ea, &apply_op(TenseOp::F, &fam));
            (!ok).then(|| "H above P or G above F".to_string())
        }),
        true,
    ));

    // The sandwich bounds only hold pointwise for reflexive frames.
    if frame.is_reflexive() {
        checks.push(sweep(
            "tense.reflexive-bounds",
            pool.iter().map(|p| {
                let fam = PropositionFamily::singleton(p.clone());
                let sp = SetProposition::of(p);
                let ok = apply_op(TenseOp::H, &fam).set_leq(ea, &sp)
                    && sp.set_leq(ea, &apply_op(TenseOp::P, &fam))
                    && apply_op(TenseOp::G, &fam).set_leq(ea, &sp)
                    && sp.set_leq(ea, &apply_op(TenseOp::F, &fam));
                (!ok).then(|| format!("at {}", render::prop_label(ea, p)))
            }),
            sampled,
        ));
    } else {
        checks.push(Check::skip(
            "tense.reflexive-bounds",
            "frame is not reflexive",
        ));
    }
    Ok(checks)
}

/// The algebra-level suite: order machinery, axiom consequences,
/// connective laws, and set-level adjointness.
pub fn run_algebra_suite(ea: &EffectAlgebra, cfg: &LawConfig) -> Report {
    let mut report = Report::default();
    report.extend(check_poset_laws(ea, cfg));
    report.extend(check_lemma3(ea));
    report.extend(check_connective_laws(ea));
    report.push(check_lemma8(ea, cfg));
    report
}

/// The full suite. With a frame (and optional named propositions from a
/// file) the tense and induction tiers run as well.
pub fn run_full_suite(
    ea: &EffectAlgebra,
    tense_inputs: Option<(&TimeFrame, &[Proposition])>,
    cfg: &LawConfig,
) -> Result<Report, TenseError> {
    let mut report = run_algebra_suite(ea, cfg);
    if let Some((frame, props)) = tense_inputs {
        report.extend(check_transformation_laws(ea, frame, cfg)?);
        report.extend(tense::check_dynamic_axioms(ea, frame, cfg)?);
        report.extend(tense::check_theorem3(ea, frame, props, cfg)?);
        report.extend(induction::check_theorems_4_5(ea, frame, cfg)?);
        let table = induction::OperatorTable::induced(frame.clone())?;
        report.extend(induction::check_extension(ea, &table, cfg));
    }
    Ok(report)
}
