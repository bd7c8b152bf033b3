//! Brute-force oracles shared by the integration tests.
//!
//! Everything here recomputes from the raw tables with plain loops, without
//! going through the library's filter, center or reticulation code.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rlkit::algebra::{boolean, chain, direct_product};
use rlkit::{Algebra, Lattice, ResiduatedLattice};

/// A generated test algebra: chains, Boolean algebras and binary products.
#[derive(Clone, Debug)]
pub enum Shape {
    Chain(usize),
    Boolean(usize),
    Product(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn size(&self) -> usize {
        match self {
            Shape::Chain(n) | Shape::Boolean(n) => *n,
            Shape::Product(a, b) => a.size() * b.size(),
        }
    }

    pub fn build(&self) -> ResiduatedLattice {
        match self {
            Shape::Chain(n) => chain(*n).unwrap(),
            Shape::Boolean(n) => boolean(*n).unwrap(),
            Shape::Product(a, b) => direct_product(&[a.build(), b.build()], 4096).unwrap().algebra,
        }
    }
}

fn leaf() -> impl Strategy<Value = Shape> {
    prop_oneof![
        (1usize..=8).prop_map(Shape::Chain),
        prop::sample::select(vec![2usize, 4, 8]).prop_map(Shape::Boolean),
    ]
}

/// Algebras of at most 16 elements, small enough for subset-scan filter
/// enumeration.
pub fn shapes() -> impl Strategy<Value = Shape> {
    prop_oneof![
        2 => leaf(),
        1 => (leaf(), leaf())
            .prop_map(|(a, b)| Shape::Product(Box::new(a), Box::new(b)))
            .prop_filter("at most 16 elements", |s| s.size() <= 16),
    ]
}

pub fn labels_of<A: Algebra>(alg: &A, xs: impl IntoIterator<Item = usize>) -> BTreeSet<String> {
    xs.into_iter().map(|x| alg.label(x).to_string()).collect()
}

pub fn named(labels: &[&str]) -> BTreeSet<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

pub fn idx<A: Algebra>(alg: &A, label: &str) -> usize {
    alg.lattice().index_of(label).unwrap_or_else(|| panic!("no element {label}"))
}

pub fn leq(l: &Lattice, a: usize, b: usize) -> bool {
    l.join(a, b) == b
}

pub fn top(l: &Lattice) -> usize {
    (0..l.size()).find(|&t| (0..l.size()).all(|x| leq(l, x, t))).unwrap()
}

pub fn bottom(l: &Lattice) -> usize {
    (0..l.size()).find(|&z| (0..l.size()).all(|x| leq(l, z, x))).unwrap()
}

pub fn power(a: &ResiduatedLattice, x: usize, n: usize) -> usize {
    (0..n).fold(top(a.lattice()), |acc, _| a.times(acc, x))
}

/// `{y : x^n ≤ y for some n}`.
pub fn principal(a: &ResiduatedLattice, x: usize) -> BTreeSet<usize> {
    let l = a.lattice();
    let n = l.size();
    (0..n).filter(|&y| (1..=n).any(|k| leq(l, power(a, x, k), y))).collect()
}

pub fn principal_lattice(l: &Lattice, x: usize) -> BTreeSet<usize> {
    (0..l.size()).filter(|&y| leq(l, x, y)).collect()
}

/// `{y : x ∨ y = 1}`.
pub fn coann_of(l: &Lattice, x: usize) -> BTreeSet<usize> {
    let t = top(l);
    (0..l.size()).filter(|&y| l.join(x, y) == t).collect()
}

pub fn complemented(l: &Lattice, e: usize) -> bool {
    let (t, z) = (top(l), bottom(l));
    (0..l.size()).any(|y| l.join(e, y) == t && l.meet(e, y) == z)
}

/// Upward closed, contains 1 and closed under `op`.
pub fn is_filter(l: &Lattice, set: &BTreeSet<usize>, op: impl Fn(usize, usize) -> usize) -> bool {
    set.contains(&top(l))
        && set.iter().all(|&x| (0..l.size()).all(|y| !leq(l, x, y) || set.contains(&y)))
        && set.iter().all(|&x| set.iter().all(|&y| set.contains(&op(x, y))))
}

/// Every `x^⊤` is `↑e` for a complemented `e`. On a residuated lattice the
/// principal filter of a Boolean element is its up-set, so one oracle serves
/// both signatures.
pub fn co_stone_oracle(l: &Lattice) -> bool {
    (0..l.size()).all(|x| {
        let c = coann_of(l, x);
        (0..l.size()).any(|e| complemented(l, e) && principal_lattice(l, e) == c)
    })
}

/// Residuation, `a ≤ b → c ⟺ a ⊙ b ≤ c`, over every triple.
pub fn residuation_holds(a: &ResiduatedLattice) -> bool {
    let l = a.lattice();
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| leq(l, x, a.implies(y, z)) == leq(l, a.times(x, y), z)))
    })
}
