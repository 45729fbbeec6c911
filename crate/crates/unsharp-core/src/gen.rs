//! Generators for valid effect algebras, used by the randomised tier of
//! the law suite and by the benchmarks.
//!
//! The constructions are the classical ones: bounded integer chains,
//! Boolean algebras of sets, horizontal sums (glueing at the bounds),
//! products of chains, and random weak subalgebras of chain products
//! (subsets closed under the supplement, with the sum restricted to
//! land inside the subset). The last family is verified through the
//! axiom checker and resampled on failure; everything else is valid by
//! construction and still routed through the checker.

use crate::algebra::{EffectAlgebra, RawAlgebra};
use rand::Rng;

fn build<T: Clone + PartialEq>(
    elems: Vec<T>,
    zero: &T,
    one: &T,
    name: impl Fn(&T) -> String,
    add: impl Fn(&T, &T) -> Option<T>,
) -> RawAlgebra {
    let index = |x: &T| elems.iter().position(|y| y == x).expect("closed carrier");
    let plus = elems
        .iter()
        .map(|a| elems.iter().map(|b| add(a, b).map(|v| index(&v))).collect())
        .collect();
    RawAlgebra {
        ids: elems.iter().map(&name).collect(),
        plus,
        zero: index(zero),
        one: index(one),
        declared_supplement: None,
    }
}

/// The chain `0 < 1 < ... < k` with addition defined below `k`.
pub fn mv_chain(k: usize) -> EffectAlgebra {
    assert!(k >= 1);
    let elems: Vec<usize> = (0..=k).collect();
    build(
        elems,
        &0,
        &k,
        |i| format!("c{i}"),
        |&a, &b| (a + b <= k).then_some(a + b),
    )
    .validate()
    .expect("chains are effect algebras")
}

/// The Boolean algebra of subsets of a `bits`-element set; the sum is
/// disjoint union.
pub fn boolean_algebra(bits: usize) -> EffectAlgebra {
    assert!(bits >= 1);
    let full: usize = (1 << bits) - 1;
    let elems: Vec<usize> = (0..=full).collect();
    build(
        elems,
        &0,
        &full,
        |m| format!("s{m}"),
        |&a, &b| (a & b == 0).then_some(a | b),
    )
    .validate()
    .expect("Boolean algebras are effect algebras")
}

/// Glues the parts at their bounds; interiors stay disjoint and sums
/// never cross parts.
pub fn horizontal_sum(parts: &[EffectAlgebra]) -> EffectAlgebra {
    // Elements: the shared bounds plus each part's interior.
    #[derive(Clone, PartialEq)]
    enum Elem {
        Zero,
        One,
        Interior(usize, usize),
    }
    let mut elems = vec![Elem::Zero, Elem::One];
    for (pi, part) in parts.iter().enumerate() {
        for e in 0..part.len() {
            if e != part.zero() && e != part.one() {
                elems.push(Elem::Interior(pi, e));
            }
        }
    }
    let lift = |pi: usize, e: usize| {
        let part = &parts[pi];
        if e == part.zero() {
            Elem::Zero
        } else if e == part.one() {
            Elem::One
        } else {
            Elem::Interior(pi, e)
        }
    };
    let add = |a: &Elem, b: &Elem| -> Option<Elem> {
        match (a, b) {
            (Elem::Zero, x) | (x, Elem::Zero) => Some(x.clone()),
            (Elem::One, _) | (_, Elem::One) => None,
            (Elem::Interior(pi, x), Elem::Interior(pj, y)) => {
                if pi != pj {
                    return None;
                }
                parts[*pi].plus(*x, *y).map(|v| lift(*pi, v))
            }
        }
    };
    let name = |e: &Elem| match e {
        Elem::Zero => "0".to_string(),
        Elem::One => "1".to_string(),
        Elem::Interior(pi, e) => format!("p{pi}{}", parts[*pi].id(*e)),
    };
    build(elems, &Elem::Zero, &Elem::One, name, add)
        .validate()
        .expect("horizontal sums are effect algebras")
}

/// The six-element non-lattice algebra: two atoms whose sums split the
/// midpoint level. `a+a = b+b = v` and `a+b = u`, so `{a, b}` has the
/// two minimal upper bounds `u` and `v`.
pub fn double_diamond() -> EffectAlgebra {
    let ids = ["0", "a", "b", "u", "v", "1"];
    const N: Option<usize> = None;
    let s = Some;
    #[rustfmt::skip]
    let plus = vec![
        vec![s(0), s(1), s(2), s(3), s(4), s(5)],
        vec![s(1), s(4), s(3), N, s(5), N],
        vec![s(2), s(3), s(4), s(5), N, N],
        vec![s(3), N, s(5), N, N, N],
        vec![s(4), s(5), N, N, N, N],
        vec![s(5), N, N, N, N, N],
    ];
    RawAlgebra {
        ids: ids.iter().map(|s| s.to_string()).collect(),
        plus,
        zero: 0,
        one: 5,
        declared_supplement: None,
    }
    .validate()
    .expect("the doubled-midpoint interval is an effect algebra")
}

/// The product of two chains, componentwise.
pub fn chain_product(k1: usize, k2: usize) -> EffectAlgebra {
    let mut elems = Vec::new();
    for i in 0..=k1 {
        for j in 0..=k2 {
            elems.push((i, j));
        }
    }
    build(
        elems,
        &(0, 0),
        &(k1, k2),
        |&(i, j)| format!("g{i}.{j}"),
        move |&(a1, a2), &(b1, b2)| (a1 + b1 <= k1 && a2 + b2 <= k2).then_some((a1 + b1, a2 + b2)),
    )
    .validate()
    .expect("chain products are effect algebras")
}

/// A random weak subalgebra of a chain product: a supplement-closed
/// subset containing the bounds, with sums restricted to the subset.
/// Associativity can fail for such restrictions, so the table goes
/// through the axiom checker and `None` means "resample".
fn random_chain_product_subalgebra(
    rng: &mut impl Rng,
    k1: usize,
    k2: usize,
    max_size: usize,
) -> Option<EffectAlgebra> {
    let mut subset: Vec<(usize, usize)> = vec![(0, 0), (k1, k2)];
    let target = rng.gen_range(4..=max_size);
    for _ in 0..3 * target {
        if subset.len() >= target {
            break;
        }
        let e = (rng.gen_range(0..=k1), rng.gen_range(0..=k2));
        let sup = (k1 - e.0, k2 - e.1);
        if !subset.contains(&e) {
            subset.push(e);
            if !subset.contains(&sup) {
                subset.push(sup);
            }
        }
    }
    if subset.len() > max_size {
        return None;
    }
    subset.sort_unstable();
    let members = subset.clone();
    let raw = build(
        subset,
        &(0, 0),
        &(k1, k2),
        |&(i, j)| format!("g{i}.{j}"),
        move |&(a1, a2), &(b1, b2)| {
            let v = (a1 + b1, a2 + b2);
            (v.0 <= k1 && v.1 <= k2 && members.contains(&v)).then_some(v)
        },
    );
    raw.validate().ok()
}

/// A random valid effect algebra with at most `max_size` elements
/// (`max_size >= 4`), mixing the construction families.
pub fn random_effect_algebra(rng: &mut impl Rng, max_size: usize) -> EffectAlgebra {
    assert!(max_size >= 4);
    loop {
        let ea = match rng.gen_range(0..6u8) {
            0 => mv_chain(rng.gen_range(1..max_size)),
            1 => {
                let bits = rng.gen_range(1..=3usize.min(max_size.ilog2() as usize));
                boolean_algebra(bits)
            }
            2 => {
                // Horizontal sum of small chains within the size budget.
                let mut parts = Vec::new();
                let mut interior = 0;
                while parts.len() < 3 {
                    let k = rng.gen_range(2..=3usize);
                    if 2 + interior + (k - 1) > max_size {
                        break;
                    }
                    interior += k - 1;
                    parts.push(mv_chain(k));
                }
                if parts.len() < 2 {
                    continue;
                }
                horizontal_sum(&parts)
            }
            3 => {
                let k2 = rng.gen_range(1..=(max_size / 2).saturating_sub(1).max(1));
                if 2 * (k2 + 1) > max_size {
                    continue;
                }
                chain_product(1, k2)
            }
            4 => {
                // Non-lattice instance, summed with a chain when the
                // budget allows.
                if max_size >= 7 && rng.gen_bool(0.5) {
                    horizontal_sum(&[double_diamond(), mv_chain(2)])
                } else if max_size >= 6 {
                    double_diamond()
                } else {
                    continue;
                }
            }
            _ => {
                let (k1, k2) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
                match random_chain_product_subalgebra(rng, k1, k2, max_size) {
                    Some(ea) => ea,
                    None => continue,
                }
            }
        };
        if ea.len() <= max_size {
            return ea;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chains_and_booleans() {
        let three = mv_chain(2);
        assert_eq!(three.len(), 3);
        assert!(three.is_lattice());
        // The midpoint is its own supplement.
        let m = three.lookup("c1").unwrap();
        assert_eq!(three.supplement(m), m);

        let diamond = boolean_algebra(2);
        assert_eq!(diamond.len(), 4);
        assert!(diamond.is_lattice());
    }

    #[test]
    fn horizontal_sum_shape() {
        let sum = horizontal_sum(&[mv_chain(2), mv_chain(2)]);
        assert_eq!(sum.len(), 4);
        // Interior atoms from different parts never add.
        let a = sum.lookup("p0c1").unwrap();
        let b = sum.lookup("p1c1").unwrap();
        assert_eq!(sum.plus(a, b), None);
        assert_eq!(sum.plus(a, a), Some(sum.one()));
    }

    #[test]
    fn products() {
        let grid = chain_product(1, 2);
        assert_eq!(grid.len(), 6);
        assert!(grid.is_lattice());
    }

    #[test]
    fn double_diamond_is_non_lattice() {
        let dd = double_diamond();
        assert_eq!(dd.len(), 6);
        assert!(!dd.is_lattice());
        let (a, b) = (dd.lookup("a").unwrap(), dd.lookup("b").unwrap());
        let ub = dd
            .poset()
            .upper_bounds(crate::poset::ElemSet::from_iter([a, b]));
        assert_eq!(dd.poset().minimal(ub).unwrap().len(), 2);
        // Summing with a chain keeps it an effect algebra.
        let bigger = horizontal_sum(&[double_diamond(), mv_chain(2)]);
        assert_eq!(bigger.len(), 7);
        assert!(!bigger.is_lattice());
    }

    #[test]
    fn random_algebras_are_valid_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut non_lattice = 0;
        for _ in 0..60 {
            let ea = random_effect_algebra(&mut rng, 8);
            assert!(ea.len() <= 8);
            assert!(ea.len() >= 2);
            if !ea.is_lattice() {
                non_lattice += 1;
            }
        }
        // The subalgebra family produces non-lattice instances too.
        assert!(non_lattice > 0, "expected some non-lattice samples");
    }

    #[test]
    fn generation_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(11);
        let mut b = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let x = random_effect_algebra(&mut a, 8);
            let y = random_effect_algebra(&mut b, 8);
            assert_eq!(x.ids(), y.ids());
        }
    }
}
