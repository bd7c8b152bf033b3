//! Finite bounded lattices and finite commutative residuated lattices over
//! dense carriers `0..n`.
//!
//! Both structures are validated on construction and immutable afterwards.
//! The [`Algebra`] trait exposes what the filter, co-annihilator and hull
//! machinery needs from either signature, so that code is written once and
//! runs on both.

mod iso;
mod limit;
mod morphism;
mod product;
mod standard;

use std::fmt;

use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::set::ElemSet;

pub use iso::{find_isomorphism, find_isomorphism_with, fingerprint};
pub use limit::{inductive_limit, InductiveLimit, InductiveSystem};
pub use morphism::{check_morphism, enumerate_morphisms, Morphism, MorphismKind};
pub use product::{direct_product, direct_product_with, Product};
pub use standard::{boolean, chain, generate_standard, StandardKind};

/// A square operation table over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<u32>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Table {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b) as u32);
            }
        }
        Table { n, cells }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Table> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTables("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTables(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTables(format!(
                    "entry {bad} in row {i} is out of range 0..{n}"
                )));
            }
        }
        Ok(Table::from_fn(n, |a, b| rows[a][b]))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.get(a, b)).collect())
            .collect()
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Residuated,
    Lattice,
}

/// A finite bounded lattice.
#[derive(Clone, Debug)]
pub struct Lattice {
    labels: Vec<String>,
    join: Table,
    meet: Table,
    bottom: usize,
    top: usize,
    leq: Vec<bool>,
    distributive: bool,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.join == other.join && self.meet == other.meet
    }
}

fn label(labels: &[String], x: usize) -> String {
    labels.get(x).cloned().unwrap_or_else(|| x.to_string())
}

fn pair(labels: &[String], a: usize, b: usize) -> String {
    format!("({},{})", label(labels, a), label(labels, b))
}

fn triple(labels: &[String], a: usize, b: usize, c: usize) -> String {
    format!("({},{},{})", label(labels, a), label(labels, b), label(labels, c))
}

fn lattice_violation(law: &str, witness: String) -> Error {
    Error::LatticeAxiomViolation { law: law.into(), witness }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl Lattice {
    /// Validates `join`/`meet` as a bounded lattice and derives its order.
    pub fn new(labels: Vec<String>, join: Table, meet: Table) -> Result<Lattice> {
        Self::new_with(labels, join, meet, Strategy::default())
    }

    pub fn new_with(
        labels: Vec<String>,
        join: Table,
        meet: Table,
        strategy: Strategy,
    ) -> Result<Lattice> {
        let n = join.size();
        if meet.size() != n {
            return Err(Error::MalformedTables(format!(
                "join has {n} rows but meet has {}",
                meet.size()
            )));
        }
        let labels = if labels.is_empty() { default_labels(n) } else { labels };
        if labels.len() != n {
            return Err(Error::MalformedTables(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        let l = &labels;
        for (name, t) in [("join", &join), ("meet", &meet)] {
            if let Some(((a, b), _)) =
                strategy.find_pair(n, |a, b| (t.get(a, b) != t.get(b, a)).then_some(()))
            {
                return Err(lattice_violation(&format!("{name} commutativity"), pair(l, a, b)));
            }
            if let Some((a, _)) = (0..n).map(|a| (a, t.get(a, a))).find(|&(a, v)| v != a) {
                return Err(lattice_violation(&format!("{name} idempotence"), label(l, a)));
            }
            if let Some(((a, b, c), _)) = strategy.find_triple(n, |a, b, c| {
                (t.get(t.get(a, b), c) != t.get(a, t.get(b, c))).then_some(())
            }) {
                return Err(lattice_violation(&format!("{name} associativity"), triple(l, a, b, c)));
            }
        }
        if let Some(((a, b), _)) = strategy.find_pair(n, |a, b| {
            (join.get(a, meet.get(a, b)) != a || meet.get(a, join.get(a, b)) != a).then_some(())
        }) {
            return Err(lattice_violation("absorption", pair(l, a, b)));
        }
        let bottom = (0..n)
            .find(|&z| (0..n).all(|x| join.get(z, x) == x))
            .ok_or_else(|| lattice_violation("bounded below", "no element is neutral for join".into()))?;
        let top = (0..n)
            .find(|&u| (0..n).all(|x| meet.get(u, x) == x))
            .ok_or_else(|| lattice_violation("bounded above", "no element is neutral for meet".into()))?;
        if let Some(((a, b), _)) = strategy.find_pair(n, |a, b| {
            ((join.get(a, b) == b) != (meet.get(a, b) == a)).then_some(())
        }) {
            return Err(Error::OrderInconsistency { a: label(l, a), b: label(l, b) });
        }
        let leq = (0..n * n).map(|k| join.get(k / n, k % n) == k % n).collect();
        let distributive = strategy
            .find_triple(n, |a, b, c| {
                (meet.get(a, join.get(b, c)) != join.get(meet.get(a, b), meet.get(a, c)))
                    .then_some(())
            })
            .is_none();
        Ok(Lattice { labels, join, meet, bottom, top, leq, distributive })
    }

    /// Builds the lattice of a finite partial order given as `leq[a][b]`.
    ///
    /// Fails when some pair lacks a least upper or greatest lower bound.
    pub fn from_order(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Lattice> {
        let n = leq.len();
        let le = |a: usize, b: usize| leq[a][b];
        for a in 0..n {
            if !le(a, a) {
                return Err(lattice_violation("order reflexivity", label(&labels, a)));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(lattice_violation("order antisymmetry", pair(&labels, a, b)));
                }
            }
        }
        let bound = |a: usize, b: usize, upper: bool| -> Option<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&x| if upper { le(a, x) && le(b, x) } else { le(x, a) && le(x, b) })
                .collect();
            cands.iter().copied().find(|&x| {
                cands.iter().all(|&y| if upper { le(x, y) } else { le(y, x) })
            })
        };
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                join[a][b] = bound(a, b, true).ok_or_else(|| {
                    lattice_violation("least upper bound exists", pair(&labels, a, b))
                })?;
                meet[a][b] = bound(a, b, false).ok_or_else(|| {
                    lattice_violation("greatest lower bound exists", pair(&labels, a, b))
                })?;
            }
        }
        if n == 0 {
            return Err(Error::MalformedTables("empty carrier".into()));
        }
        Lattice::new(labels, Table::from_rows(&join)?, Table::from_rows(&meet)?)
    }

    pub fn size(&self) -> usize {
        self.join.size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// Errors with the first failing triple when the lattice is not distributive.
    pub fn require_distributive(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Err(Error::NotDistributive {
                            a: self.labels[a].clone(),
                            b: self.labels[b].clone(),
                            c: self.labels[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Cover pairs `(lo, hi)`: `lo < hi` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let lt = |a: usize, b: usize| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Index of the element carrying `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::MalformedTables("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Complemented elements paired with their (unique, by distributivity) complement.
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.join(a, b) == self.top && self.meet(a, b) == self.bottom)
    }

    /// Pseudocomplement: the greatest `m` with `a ∧ m = 0`, if one exists.
    pub fn pseudocomplement(&self, a: usize) -> Option<usize> {
        let n = self.size();
        let disjoint: Vec<usize> = (0..n).filter(|&m| self.meet(a, m) == self.bottom).collect();
        disjoint
            .iter()
            .copied()
            .find(|&m| disjoint.iter().all(|&k| self.leq(k, m)))
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.covers()
            .into_iter()
            .filter(|&(lo, _)| lo == self.bottom)
            .map(|(_, hi)| hi)
            .collect()
    }
}

/// A finite commutative residuated lattice `(A, ∨, ∧, ⊙, →, 0, 1)`.
#[derive(Clone, Debug)]
pub struct ResiduatedLattice {
    lattice: Lattice,
    times: Table,
    implies: Table,
}

impl PartialEq for ResiduatedLattice {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.times == other.times && self.implies == other.implies
    }
}

/// Operation tables of a residuated lattice before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTables {
    pub labels: Vec<String>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub times: Vec<Vec<usize>>,
    pub implies: Vec<Vec<usize>>,
}

/// Validates raw tables as a residuated lattice.
///
/// Checks the bounded-lattice laws and order consistency, commutativity and
/// the unit of `⊙`, the law of residuation on all n³ triples, and finally
/// associativity of `⊙`. The error names the first violated law together with
/// its witness.
pub fn validate_algebra(raw: &RawTables) -> Result<ResiduatedLattice> {
    validate_algebra_with(raw, Strategy::default())
}

pub fn validate_algebra_with(raw: &RawTables, strategy: Strategy) -> Result<ResiduatedLattice> {
    let n = raw.join.len();
    for (name, t) in [("meet", &raw.meet), ("times", &raw.times), ("implies", &raw.implies)] {
        if t.len() != n {
            return Err(Error::MalformedTables(format!(
                "{name} has {} rows, expected {n}",
                t.len()
            )));
        }
    }
    ResiduatedLattice::new_with(
        raw.labels.clone(),
        Table::from_rows(&raw.join)?,
        Table::from_rows(&raw.meet)?,
        Table::from_rows(&raw.times)?,
        Table::from_rows(&raw.implies)?,
        strategy,
    )
}

impl ResiduatedLattice {
    pub fn new(
        labels: Vec<String>,
        join: Table,
        meet: Table,
        times: Table,
        implies: Table,
    ) -> Result<Self> {
        Self::new_with(labels, join, meet, times, implies, Strategy::default())
    }

    pub fn new_with(
        labels: Vec<String>,
        join: Table,
        meet: Table,
        times: Table,
        implies: Table,
        strategy: Strategy,
    ) -> Result<Self> {
        let n = join.size();
        if times.size() != n || implies.size() != n {
            return Err(Error::MalformedTables("operation tables differ in size".into()));
        }
        let lattice = Lattice::new_with(labels, join, meet, strategy)?;
        let l = lattice.labels();
        let monoid = |law: &str, witness: String| Error::MonoidAxiomViolation {
            law: law.into(),
            witness,
        };
        if let Some(((a, b), _)) =
            strategy.find_pair(n, |a, b| (times.get(a, b) != times.get(b, a)).then_some(()))
        {
            return Err(monoid("commutativity", pair(l, a, b)));
        }
        let top = lattice.top();
        if let Some(a) = (0..n).find(|&a| times.get(top, a) != a) {
            return Err(monoid("top is the identity", label(l, a)));
        }
        if let Some(((a, b, c), (lhs, rhs))) = strategy.find_triple(n, |a, b, c| {
            let lhs = lattice.leq(a, implies.get(b, c));
            let rhs = lattice.leq(times.get(a, b), c);
            (lhs != rhs).then_some((lhs, rhs))
        }) {
            return Err(Error::ResiduationViolation {
                a: label(l, a),
                b: label(l, b),
                c: label(l, c),
                lhs,
                rhs,
            });
        }
        if let Some(((a, b, c), _)) = strategy.find_triple(n, |a, b, c| {
            (times.get(times.get(a, b), c) != times.get(a, times.get(b, c))).then_some(())
        }) {
            return Err(monoid("associativity", triple(l, a, b, c)));
        }
        Ok(ResiduatedLattice { lattice, times, implies })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn times_table(&self) -> &Table {
        &self.times
    }

    pub fn implies_table(&self) -> &Table {
        &self.implies
    }

    #[inline]
    pub fn times(&self, a: usize, b: usize) -> usize {
        self.times.get(a, b)
    }

    #[inline]
    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.implies.get(a, b)
    }

    /// `¬a = a → 0`.
    pub fn neg(&self, a: usize) -> usize {
        self.implies(a, self.lattice.bottom())
    }

    /// `a ↔ b = (a → b) ∧ (b → a)`.
    pub fn biimp(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(self.implies(a, b), self.implies(b, a))
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        Ok(ResiduatedLattice { lattice: self.lattice.with_labels(labels)?, ..self })
    }

    /// Tables for `¬`, `↔` and the power sequences.
    pub fn derived_ops(&self) -> DerivedOps {
        let n = self.size();
        let powers: Vec<Vec<usize>> = (0..n).map(|a| power_sequence(self, a)).collect();
        let stabilization: Vec<usize> = powers.iter().map(|p| p.len()).collect();
        DerivedOps {
            neg: (0..n).map(|a| self.neg(a)).collect(),
            biimp: Table::from_fn(n, |a, b| self.biimp(a, b)),
            stabilization_index: stabilization.iter().copied().max().unwrap_or(1),
            stabilization,
            powers,
        }
    }
}

/// Derived operations of a residuated lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOps {
    pub neg: Vec<usize>,
    pub biimp: Table,
    /// `powers[a][k-1] = a^k` for `k = 1..=stabilization[a]`.
    pub powers: Vec<Vec<usize>>,
    /// Least `k ≥ 1` with `a^(k+1) = a^k`, per element.
    pub stabilization: Vec<usize>,
    /// Maximum of `stabilization`.
    pub stabilization_index: usize,
}

impl DerivedOps {
    /// `a^k`, with `a^0 = 1` supplied by the caller's algebra.
    pub fn power(&self, a: usize, k: usize, top: usize) -> usize {
        if k == 0 {
            return top;
        }
        let p = &self.powers[a];
        p[(k - 1).min(p.len() - 1)]
    }
}

/// `[a, a², …, a^s]` where `s` is the first exponent with `a^(s+1) = a^s`.
///
/// The sequence is decreasing, so it stabilizes within `n` steps.
pub fn power_sequence<A: Algebra>(alg: &A, a: usize) -> Vec<usize> {
    let mut seq = vec![a];
    loop {
        let last = *seq.last().unwrap();
        let next = alg.filter_op(a, last);
        if next == last || seq.len() > alg.size() {
            return seq;
        }
        seq.push(next);
    }
}

/// What the filter, co-annihilator and hull constructions need from an algebra.
pub trait Algebra: Clone + Send + Sync + fmt::Debug + PartialEq {
    const KIND: Kind;

    fn lattice(&self) -> &Lattice;

    /// The monoid operation that filters are closed under: `⊙` for residuated
    /// lattices, `∧` for lattices.
    fn filter_op(&self, a: usize, b: usize) -> usize;

    /// `a ≡ b (mod F)` for the filter `f`.
    fn congruent(&self, f: &ElemSet, a: usize, b: usize) -> bool;

    /// The complement of `a`, if `a` is in the Boolean center.
    fn complement(&self, a: usize) -> Option<usize>;

    /// The negation of the rival Stone identity: `¬a` for residuated
    /// lattices, the pseudocomplement `a*` (if any) for lattices.
    fn negation(&self, a: usize) -> Option<usize>;

    /// `a → b`, when the signature has it.
    fn residuum(&self, _a: usize, _b: usize) -> Option<usize> {
        None
    }

    /// All operation tables of the signature, in a fixed order.
    fn tables(&self) -> Vec<&Table>;

    fn table_names() -> &'static [&'static str];

    /// Rebuilds (and validates) an algebra from tables in `tables()` order.
    fn from_tables(labels: Vec<String>, tables: Vec<Table>, strategy: Strategy) -> Result<Self>;

    fn size(&self) -> usize {
        self.lattice().size()
    }

    fn labels(&self) -> &[String] {
        self.lattice().labels()
    }

    fn label(&self, x: usize) -> &str {
        self.lattice().label(x)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.lattice().join(a, b)
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice().meet(a, b)
    }

    fn bottom(&self) -> usize {
        self.lattice().bottom()
    }

    fn top(&self) -> usize {
        self.lattice().top()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice().leq(a, b)
    }

    /// `a^k` under [`Algebra::filter_op`], `a^0 = 1`.
    fn power(&self, a: usize, k: usize) -> usize {
        let mut acc = self.top();
        for _ in 0..k {
            let next = self.filter_op(a, acc);
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// Largest power-stabilization index over all elements (at least 1).
    fn stabilization_index(&self) -> usize {
        (0..self.size())
            .map(|a| power_sequence(self, a).len())
            .max()
            .unwrap_or(1)
    }

    /// Applies `perm` (old index -> new index) to the carrier.
    fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut inv = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || inv[new] != usize::MAX {
                return Err(Error::MalformedTables("relabeling is not a permutation".into()));
            }
            inv[new] = old;
        }
        let labels = (0..n).map(|i| self.labels()[inv[i]].clone()).collect();
        let tables = self
            .tables()
            .iter()
            .map(|t| Table::from_fn(n, |a, b| perm[t.get(inv[a], inv[b])]))
            .collect();
        Self::from_tables(labels, tables, Strategy::default())
    }
}

impl Algebra for Lattice {
    const KIND: Kind = Kind::Lattice;

    fn lattice(&self) -> &Lattice {
        self
    }

    fn filter_op(&self, a: usize, b: usize) -> usize {
        self.meet(a, b)
    }

    /// `a ≡ b` iff `a ∧ e = b ∧ e` for some `e ∈ F`.
    fn congruent(&self, f: &ElemSet, a: usize, b: usize) -> bool {
        f.iter().any(|e| self.meet(a, e) == self.meet(b, e))
    }

    fn complement(&self, a: usize) -> Option<usize> {
        self.complement_of(a)
    }

    fn negation(&self, a: usize) -> Option<usize> {
        self.pseudocomplement(a)
    }

    fn tables(&self) -> Vec<&Table> {
        vec![&self.join, &self.meet]
    }

    fn table_names() -> &'static [&'static str] {
        &["join", "meet"]
    }

    fn from_tables(labels: Vec<String>, mut tables: Vec<Table>, strategy: Strategy) -> Result<Self> {
        if tables.len() != 2 {
            return Err(Error::MalformedTables("a lattice needs join and meet".into()));
        }
        let meet = tables.pop().unwrap();
        let join = tables.pop().unwrap();
        Lattice::new_with(labels, join, meet, strategy)
    }
}

impl Algebra for ResiduatedLattice {
    const KIND: Kind = Kind::Residuated;

    fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    fn filter_op(&self, a: usize, b: usize) -> usize {
        self.times(a, b)
    }

    /// `a ≡ b` iff `a ↔ b ∈ F`.
    fn congruent(&self, f: &ElemSet, a: usize, b: usize) -> bool {
        f.contains(self.biimp(a, b))
    }

    /// `a ∈ B(A)` iff `a ∨ ¬a = 1`; the complement is then `¬a`.
    fn complement(&self, a: usize) -> Option<usize> {
        let na = self.neg(a);
        (self.join(a, na) == self.top()).then_some(na)
    }

    fn negation(&self, a: usize) -> Option<usize> {
        Some(self.neg(a))
    }

    fn residuum(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.implies(a, b))
    }

    fn tables(&self) -> Vec<&Table> {
        vec![self.lattice.join_table(), self.lattice.meet_table(), &self.times, &self.implies]
    }

    fn table_names() -> &'static [&'static str] {
        &["join", "meet", "times", "implies"]
    }

    fn from_tables(labels: Vec<String>, tables: Vec<Table>, strategy: Strategy) -> Result<Self> {
        let [join, meet, times, implies]: [Table; 4] = tables
            .try_into()
            .map_err(|_| Error::MalformedTables("a residuated lattice needs four tables".into()))?;
        ResiduatedLattice::new_with(labels, join, meet, times, implies, strategy)
    }
}
