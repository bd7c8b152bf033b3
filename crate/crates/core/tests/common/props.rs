//! The randomized lemma checks, shared by the property suite and the
//! acceptance run. Each takes an algebra plus three element indices and a
//! filter index (all reduced modulo the relevant size).

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rlkit::filters::{enumerate_filters, principal_filter, quotient};
use rlkit::reticulation::reticulate;
use rlkit::transfer::{lambda_boolean, lambda_extremes};
use rlkit::{Algebra, Caps, ResiduatedLattice};

use super::{bottom, complemented, is_filter, leq, power, principal, principal_lattice, top, Shape};

pub type Case = (Shape, usize, usize, usize, usize);

pub fn cases() -> impl Strategy<Value = Case> {
    (super::shapes(), any::<usize>(), any::<usize>(), any::<usize>(), any::<usize>())
}

fn members(f: &rlkit::filters::Filter) -> BTreeSet<usize> {
    f.members().iter().collect()
}

/// Items 1 to 3 of the arithmetic lemma.
pub fn arithmetic(alg: &ResiduatedLattice, x: usize, y: usize, z: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    let t = top(l);
    if l.join(x, y) == t {
        prop_assert_eq!(alg.times(x, y), l.meet(x, y), "x∨y=1 but x⊙y≠x∧y at ({}, {})", x, y);
    }
    prop_assert!(leq(l, alg.times(l.join(x, y), l.join(x, z)), l.join(x, alg.times(y, z))));
    for n in 1..=3 {
        for k in 1..=3 {
            prop_assert!(leq(
                l,
                power(alg, l.join(x, y), n * k),
                l.join(power(alg, x, n), power(alg, y, k))
            ));
        }
    }
    prop_assert_eq!(leq(l, x, y), alg.implies(x, y) == t);
    Ok(())
}

/// Membership of `x ⊙ y`, `x ∧ y` and the pair agree for every filter, and
/// the library's filter list is exactly the set of oracle filters.
pub fn in_filter(alg: &ResiduatedLattice, x: usize, y: usize, pick: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    let fl = enumerate_filters(alg, &Caps::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let n = l.size();
    let oracle: Vec<BTreeSet<usize>> = (1u64..1 << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| is_filter(l, s, |a, b| alg.times(a, b)))
        .collect();
    let got: BTreeSet<BTreeSet<usize>> = fl.filters.iter().map(members).collect();
    prop_assert_eq!(&got, &oracle.into_iter().collect::<BTreeSet<_>>());
    let f = members(&fl.filters[pick % fl.filters.len()]);
    let both = f.contains(&x) && f.contains(&y);
    prop_assert_eq!(f.contains(&alg.times(x, y)), both);
    prop_assert_eq!(f.contains(&l.meet(x, y)), both);
    Ok(())
}

/// `<x> ∩ <y> = <x ∨ y>` in both signatures, against the power oracle.
pub fn principal_meet(alg: &ResiduatedLattice, x: usize, y: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    for v in [x, y, l.join(x, y)] {
        prop_assert_eq!(members(&principal_filter(alg, v)), principal(alg, v));
        prop_assert_eq!(members(&principal_filter(l, v)), principal_lattice(l, v));
    }
    let px = principal(alg, x);
    let py = principal(alg, y);
    prop_assert_eq!(px.intersection(&py).copied().collect::<BTreeSet<_>>(), principal(alg, l.join(x, y)));
    let qx = principal_lattice(l, x);
    let qy = principal_lattice(l, y);
    prop_assert_eq!(qx.intersection(&qy).copied().collect::<BTreeSet<_>>(), principal_lattice(l, l.join(x, y)));
    Ok(())
}

/// `x/F = 1/F ⟺ x ∈ F` and `x/F ≤ y/F ⟺ x → y ∈ F`.
pub fn quotient_order(alg: &ResiduatedLattice, x: usize, y: usize, pick: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    let fl = enumerate_filters(alg, &Caps::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let f = &fl.filters[pick % fl.filters.len()];
    let q = quotient(alg, f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let ql = q.algebra.lattice();
    prop_assert_eq!(q.class_of(x) == q.class_of(top(l)), f.contains(x));
    prop_assert_eq!(leq(ql, q.class_of(x), q.class_of(y)), f.contains(alg.implies(x, y)));
    Ok(())
}

/// `λ(x) = 1 ⟺ x = 1` and `λ(x) = 0 ⟺ x` is nilpotent.
pub fn lambda_top_bottom(alg: &ResiduatedLattice, x: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    let ret = reticulate(alg).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let r = lambda_extremes(&ret);
    prop_assert!(r.all_passed(), "{}", r);
    let n = l.size();
    let nilpotent = (1..=n).any(|k| power(alg, x, k) == bottom(l));
    prop_assert_eq!(ret.lambda(x) == top(&ret.lattice), x == top(l));
    prop_assert_eq!(ret.lambda(x) == bottom(&ret.lattice), nilpotent);
    Ok(())
}

/// `x ∈ B(A) ⟹ λ(x) ∈ B(L(A))`, and `λ(x) ∈ B(L(A)) ⟺ x^n ∈ B(A)` for some n.
pub fn lambda_center(alg: &ResiduatedLattice, x: usize) -> Result<(), TestCaseError> {
    let l = alg.lattice();
    let ret = reticulate(alg).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let r = lambda_boolean(&ret);
    prop_assert!(r.all_passed(), "{}", r);
    let image_boolean = complemented(&ret.lattice, ret.lambda(x));
    if complemented(l, x) {
        prop_assert!(image_boolean);
    }
    let some_power = (1..=l.size()).any(|k| complemented(l, power(alg, x, k)));
    prop_assert_eq!(image_boolean, some_power);
    Ok(())
}

/// All of the above on one case.
pub fn all(case: &Case) -> Result<(), TestCaseError> {
    let (shape, x, y, z, pick) = case;
    let alg = shape.build();
    let n = alg.size();
    let (x, y, z) = (x % n, y % n, z % n);
    arithmetic(&alg, x, y, z)?;
    in_filter(&alg, x, y, *pick)?;
    principal_meet(&alg, x, y)?;
    quotient_order(&alg, x, y, *pick)?;
    lambda_top_bottom(&alg, x)?;
    lambda_center(&alg, x)
}
