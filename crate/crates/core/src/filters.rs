//! Filters, the filter lattice, prime filters and quotients by filters.

use std::fmt;

use crate::algebra::{Algebra, Lattice, Morphism, MorphismKind, Table};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::set::ElemSet;

/// A filter of some host algebra, stored as its member set.
///
/// Filters do not borrow their host; operations that combine two filters
/// reject members of different carriers with [`Error::HostMismatch`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(ElemSet);

impl Filter {
    /// Wraps `set` after checking the filter axioms in `alg`.
    pub fn new<A: Algebra>(alg: &A, set: ElemSet) -> Result<Filter> {
        check_filter(alg, &set).map_err(Error::NotAFilter)?;
        Ok(Filter(set))
    }

    /// The whole carrier.
    pub fn whole<A: Algebra>(alg: &A) -> Filter {
        Filter(ElemSet::full(alg.size()))
    }

    /// `{1}`.
    pub fn unit<A: Algebra>(alg: &A) -> Filter {
        Filter(ElemSet::singleton(alg.size(), alg.top()))
    }

    pub fn members(&self) -> &ElemSet {
        &self.0
    }

    pub fn into_members(self) -> ElemSet {
        self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn host_size(&self) -> usize {
        self.0.universe()
    }

    pub fn is_proper(&self) -> bool {
        !self.0.is_full()
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        self.0.display_with(labels)
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filter{:?}", self.0)
    }
}

/// Why `set` is not a filter of `alg`, if it is not.
pub fn check_filter<A: Algebra>(alg: &A, set: &ElemSet) -> Result<(), String> {
    let n = alg.size();
    if set.universe() != n {
        return Err(format!("set over {} elements, host has {n}", set.universe()));
    }
    if !set.contains(alg.top()) {
        return Err("top is missing".into());
    }
    for a in set.iter() {
        if let Some(b) = (0..n).find(|&b| alg.leq(a, b) && !set.contains(b)) {
            return Err(format!("not upward closed: {} <= {}", alg.label(a), alg.label(b)));
        }
        if let Some(b) = set.iter().find(|&b| !set.contains(alg.filter_op(a, b))) {
            return Err(format!("not closed under the product at ({},{})", alg.label(a), alg.label(b)));
        }
    }
    Ok(())
}

pub fn is_filter<A: Algebra>(alg: &A, set: &ElemSet) -> bool {
    check_filter(alg, set).is_ok()
}

/// Everything above some member of `set`.
pub fn up_closure<A: Algebra>(alg: &A, set: &ElemSet) -> ElemSet {
    let n = alg.size();
    ElemSet::from_iter(n, (0..n).filter(|&b| set.iter().any(|a| alg.leq(a, b))))
}

/// `<a> = {b : a^k ≤ b for some k}`.
///
/// Since powers decrease, `a^k` for `k` at the stabilization point lies below
/// every other power, so `<a>` is the up-set of that single element.
pub fn principal_filter<A: Algebra>(alg: &A, a: usize) -> Filter {
    let n = alg.size();
    let k = alg.stabilization_index();
    let bottom_power = alg.power(a, k.max(1));
    Filter(ElemSet::from_iter(n, (0..n).filter(|&b| alg.leq(bottom_power, b))))
}

/// The least filter containing `x`, by closing under products and then
/// upward until nothing changes. `<∅> = {1}`.
pub fn generated_filter<A: Algebra>(alg: &A, x: &ElemSet) -> Filter {
    let n = alg.size();
    let mut set = x.clone();
    set.insert(alg.top());
    loop {
        let mut next = set.clone();
        for a in set.iter() {
            for b in set.iter() {
                next.insert(alg.filter_op(a, b));
            }
        }
        let next = up_closure(alg, &next);
        if next == set {
            return Filter(set);
        }
        debug_assert_eq!(next.universe(), n);
        set = next;
    }
}

fn same_host(f: &Filter, g: &Filter) -> Result<()> {
    if f.host_size() != g.host_size() {
        return Err(Error::HostMismatch(f.host_size(), g.host_size()));
    }
    Ok(())
}

/// `F ∩ G`.
pub fn filter_meet(f: &Filter, g: &Filter) -> Result<Filter> {
    same_host(f, g)?;
    Ok(Filter(f.0.intersection(&g.0)))
}

/// `F ∨ G = <F ∪ G>`.
pub fn filter_join<A: Algebra>(alg: &A, f: &Filter, g: &Filter) -> Result<Filter> {
    same_host(f, g)?;
    if f.host_size() != alg.size() {
        return Err(Error::HostMismatch(f.host_size(), alg.size()));
    }
    Ok(generated_filter(alg, &f.0.union(&g.0)))
}

/// All filters of an algebra, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct FilterLattice {
    /// Sorted canonically: `{1}` first, the whole carrier last.
    pub filters: Vec<Filter>,
    /// Lattice over `filters` with `∩` as meet and generated union as join.
    pub lattice: Lattice,
    /// First `(a, b)` where `<a> ∩ <b> ≠ <a ∨ b>`, if any.
    pub principal_meet_witness: Option<(usize, usize)>,
}

impl FilterLattice {
    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.filters.binary_search(f).ok()
    }
}

/// The distinct principal filters, sorted canonically.
pub fn principal_filters<A: Algebra>(alg: &A) -> Vec<Filter> {
    let mut fs: Vec<Filter> = (0..alg.size()).map(|a| principal_filter(alg, a)).collect();
    fs.sort();
    fs.dedup();
    fs
}

/// Every filter, found by testing all `2^n` subsets.
pub fn enumerate_filters<A: Algebra>(alg: &A, caps: &Caps) -> Result<FilterLattice> {
    let n = alg.size();
    if n > caps.filter_enumeration || n > 31 {
        return Err(Error::CapExceeded {
            what: "filter enumeration".into(),
            size: n,
            cap: caps.filter_enumeration.min(31),
        });
    }
    let up: Vec<u32> = (0..n)
        .map(|a| (0..n).filter(|&b| alg.leq(a, b)).fold(0u32, |m, b| m | 1 << b))
        .collect();
    let top_bit = 1u32 << alg.top();
    let masks = caps.strategy.filter_map_u64(1u64 << n, |m| {
        let m = m as u32;
        if m & top_bit == 0 {
            return None;
        }
        let members = (0..n).filter(|&a| m >> a & 1 == 1);
        for a in members.clone() {
            if up[a] & !m != 0 {
                return None;
            }
            for b in members.clone() {
                if m >> alg.filter_op(a, b) & 1 == 0 {
                    return None;
                }
            }
        }
        Some(m)
    });
    let mut filters: Vec<Filter> = masks
        .into_iter()
        .map(|m| Filter(ElemSet::from_mask(n, m as u64)))
        .collect();
    filters.sort();
    let lattice = filter_lattice_over(alg, &filters, caps.strategy)?;
    let principal_meet_witness = caps
        .strategy
        .find_pair(n, |a, b| {
            let lhs = principal_filter(alg, a).0.intersection(&principal_filter(alg, b).0);
            (lhs != principal_filter(alg, alg.join(a, b)).0).then_some(())
        })
        .map(|(p, _)| p);
    Ok(FilterLattice { filters, lattice, principal_meet_witness })
}

/// The lattice structure on a sorted list of filters closed under `∩` and `∨`.
pub(crate) fn filter_lattice_over<A: Algebra>(
    alg: &A,
    filters: &[Filter],
    strategy: Strategy,
) -> Result<Lattice> {
    let k = filters.len();
    let find = |s: &ElemSet| -> Result<usize> {
        filters
            .iter()
            .position(|f| &f.0 == s)
            .ok_or_else(|| Error::NotAFilter(format!("{s:?} is missing from the filter family")))
    };
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            meet[i][j] = find(&filters[i].0.intersection(&filters[j].0))?;
            join[i][j] = find(&generated_filter(alg, &filters[i].0.union(&filters[j].0)).0)?;
        }
    }
    let labels = filters.iter().map(|f| f.display_with(alg.labels())).collect();
    Lattice::new_with(labels, Table::from_rows(&join)?, Table::from_rows(&meet)?, strategy)
}

/// Proper filters `P` with `a ∨ b ∈ P ⇒ a ∈ P or b ∈ P`, sorted canonically.
pub fn enumerate_prime_filters<A: Algebra>(alg: &A, caps: &Caps) -> Result<Vec<Filter>> {
    let fl = enumerate_filters(alg, caps)?;
    Ok(fl.filters.into_iter().filter(|p| is_prime(alg, p)).collect())
}

pub fn is_prime<A: Algebra>(alg: &A, p: &Filter) -> bool {
    let n = alg.size();
    p.is_proper()
        && (0..n).all(|a| {
            (0..n).all(|b| !p.contains(alg.join(a, b)) || p.contains(a) || p.contains(b))
        })
}

/// `A/F` together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient<A> {
    pub algebra: A,
    pub projection: Morphism,
    /// Congruence classes, sorted by least member.
    pub classes: Vec<ElemSet>,
}

impl<A: Algebra> Quotient<A> {
    pub fn class_of(&self, a: usize) -> usize {
        self.projection.map[a]
    }

    /// The least member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c].iter().next().expect("classes are nonempty")
    }
}

/// `A/F` under the congruence of the algebra's signature: `a ↔ b ∈ F` for
/// residuated lattices, `a ∧ e = b ∧ e` for some `e ∈ F` for lattices.
///
/// The relation is checked to be an equivalence and every operation to be
/// independent of representatives; the projection is checked to be a
/// surjective morphism.
pub fn quotient<A: Algebra>(alg: &A, f: &Filter) -> Result<Quotient<A>> {
    let n = alg.size();
    if f.host_size() != n {
        return Err(Error::HostMismatch(f.host_size(), n));
    }
    check_filter(alg, f.members()).map_err(Error::NotAFilter)?;
    let fail = |msg: String| Err(Error::CongruenceFailure(msg));
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<ElemSet> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let members = ElemSet::from_iter(n, (0..n).filter(|&b| alg.congruent(f.members(), a, b)));
        for b in members.iter() {
            if class_of[b] != usize::MAX {
                return fail(format!(
                    "relation is not transitive at ({},{})",
                    alg.label(a),
                    alg.label(b)
                ));
            }
            class_of[b] = classes.len();
        }
        classes.push(members);
    }
    for a in 0..n {
        for b in 0..n {
            if alg.congruent(f.members(), a, b) != (class_of[a] == class_of[b]) {
                return fail(format!("relation is not an equivalence at ({},{})", alg.label(a), alg.label(b)));
            }
        }
    }
    let k = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c.iter().next().unwrap()).collect();
    let mut tables = Vec::new();
    for (name, t) in A::table_names().iter().zip(alg.tables()) {
        for a in 0..n {
            for b in 0..n {
                let expected = class_of[t.get(reps[class_of[a]], reps[class_of[b]])];
                if class_of[t.get(a, b)] != expected {
                    return fail(format!(
                        "{name} depends on representatives at ({},{})",
                        alg.label(a),
                        alg.label(b)
                    ));
                }
            }
        }
        tables.push(Table::from_fn(k, |x, y| class_of[t.get(reps[x], reps[y])]));
    }
    let labels = classes
        .iter()
        .map(|c| {
            let pick = if c.contains(alg.top()) {
                alg.top()
            } else if c.contains(alg.bottom()) {
                alg.bottom()
            } else {
                c.iter().next().unwrap()
            };
            alg.label(pick).to_string()
        })
        .collect();
    let algebra = A::from_tables(labels, tables, Strategy::default())?;
    let projection = Morphism { map: class_of, target_size: k, kind: MorphismKind::of::<A>() };
    crate::algebra::check_morphism(alg, &algebra, &projection.map)
        .map_err(|e| Error::CongruenceFailure(format!("projection: {e}")))?;
    Ok(Quotient { algebra, projection, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean, chain, find_isomorphism};
    use crate::corpus;

    fn set<A: Algebra>(alg: &A, labels: &[&str]) -> ElemSet {
        ElemSet::from_iter(alg.size(), labels.iter().map(|l| alg.lattice().index_of(l).unwrap()))
    }

    /// Filters by brute force straight from the definition.
    fn oracle_filters<A: Algebra>(alg: &A) -> Vec<ElemSet> {
        let n = alg.size();
        let mut out: Vec<ElemSet> = (0..1u64 << n)
            .map(|m| ElemSet::from_mask(n, m))
            .filter(|s| {
                s.contains(alg.top())
                    && s.iter().all(|a| (0..n).all(|b| !alg.leq(a, b) || s.contains(b)))
                    && s.iter().all(|a| s.iter().all(|b| s.contains(alg.filter_op(a, b))))
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn principal_filters_of_lrex3() {
        let a = corpus::get("lrex3").unwrap();
        let p = |x: &str| principal_filter(&a, a.lattice().index_of(x).unwrap()).into_members();
        assert_eq!(p("a"), set(&a, &["a", "c", "1"]));
        assert_eq!(p("c"), set(&a, &["a", "c", "1"]));
        assert_eq!(p("d"), set(&a, &["d", "1"]));
        assert_eq!(p("1"), set(&a, &["1"]));
        assert!(p("b").is_full());
        assert!(p("0").is_full());
    }

    #[test]
    fn generated_filters() {
        let a = corpus::get("lrex0_5").unwrap();
        let g = generated_filter(&a, &set(&a, &["b", "c"]));
        assert_eq!(g.members(), &set(&a, &["a", "b", "c", "1"]));
        // Least filter containing {b, c} among all filters.
        let least = oracle_filters(&a)
            .into_iter()
            .filter(|f| set(&a, &["b", "c"]).is_subset(f))
            .min_by_key(|f| f.len())
            .unwrap();
        assert_eq!(g.members(), &least);
        assert_eq!(generated_filter(&a, &ElemSet::empty(5)), Filter::unit(&a));
        assert_eq!(generated_filter(&a, &set(&a, &["0"])), Filter::whole(&a));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let caps = Caps::default();
        for key in ["lrex0", "lrex0_5", "lrex3", "lrex4", "lrex8", "chain:5", "boolean:8", "chain:1"] {
            let a = corpus::get(key).unwrap();
            let fl = enumerate_filters(&a, &caps).unwrap();
            let got: Vec<ElemSet> = fl.filters.iter().map(|f| f.members().clone()).collect();
            assert_eq!(got, oracle_filters(&a), "{key}");
            // Finite filters are principal.
            assert_eq!(fl.filters, principal_filters(&a), "{key}");
            assert!(fl.lattice.is_distributive());
            assert_eq!(fl.filters[fl.lattice.bottom()], Filter::unit(&a));
            assert_eq!(fl.filters[fl.lattice.top()], Filter::whole(&a));
            assert_eq!(fl.principal_meet_witness, None);
        }
        let a = corpus::get("lrex3").unwrap();
        assert_eq!(enumerate_filters(&a, &caps).unwrap().len(), 4);
        assert_eq!(enumerate_filters(&chain(6).unwrap(), &caps).unwrap().len(), 6);
        assert_eq!(enumerate_filters(&chain(1).unwrap(), &caps).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps { filter_enumeration: 4, ..Caps::default() };
        assert!(matches!(
            enumerate_filters(&chain(5).unwrap(), &caps),
            Err(Error::CapExceeded { size: 5, cap: 4, .. })
        ));
    }

    #[test]
    fn primes() {
        let caps = Caps::default();
        let a = corpus::get("lrex3").unwrap();
        let primes = enumerate_prime_filters(&a, &caps).unwrap();
        let oracle: Vec<ElemSet> = oracle_filters(&a)
            .into_iter()
            .filter(|p| {
                !p.is_full()
                    && (0..6).all(|x| (0..6).all(|y| !p.contains(a.join(x, y)) || p.contains(x) || p.contains(y)))
            })
            .collect();
        assert_eq!(primes.iter().map(|p| p.members().clone()).collect::<Vec<_>>(), oracle);
        assert_eq!(primes[0].members(), &set(&a, &["d", "1"]));
        assert_eq!(primes[1].members(), &set(&a, &["a", "c", "1"]));
        assert_eq!(enumerate_prime_filters(&boolean(4).unwrap(), &caps).unwrap().len(), 2);
        assert!(enumerate_prime_filters(&chain(1).unwrap(), &caps).unwrap().is_empty());
    }

    #[test]
    fn quotient_of_lrex0_5_by_c_top() {
        let a = corpus::get("lrex0_5").unwrap();
        let f = Filter::new(&a, set(&a, &["c", "1"])).unwrap();
        let q = quotient(&a, &f).unwrap();
        assert_eq!(q.classes, vec![set(&a, &["0"]), set(&a, &["a", "b"]), set(&a, &["c", "1"])]);
        assert!(find_isomorphism(&q.algebra, &chain(3).unwrap()).unwrap().is_some());
        assert_eq!(q.algebra.labels(), ["0", "a", "1"]);
        assert!(q.projection.is_surjective());
    }

    #[test]
    fn extreme_quotients() {
        let a = corpus::get("lrex3").unwrap();
        let q = quotient(&a, &Filter::unit(&a)).unwrap();
        assert!(find_isomorphism(&q.algebra, &a).unwrap().is_some());
        assert_eq!(quotient(&a, &Filter::whole(&a)).unwrap().algebra.size(), 1);
        // Lattice congruence on the lattice reduct.
        let l = a.lattice().clone();
        let ql = quotient(&l, &Filter::new(&l, set(&a, &["d", "1"])).unwrap()).unwrap();
        // a ∧ d = 0 ∧ d, c ∧ d = b = b ∧ d: classes {0,a}, {b,c}, {d,1}.
        assert_eq!(ql.classes, vec![set(&a, &["0", "a"]), set(&a, &["b", "c"]), set(&a, &["d", "1"])]);
    }

    #[test]
    fn filter_operations() {
        let a = corpus::get("lrex0_5").unwrap();
        let f = Filter::new(&a, set(&a, &["c", "1"])).unwrap();
        let g = Filter::new(&a, set(&a, &["b", "1"])).unwrap();
        assert_eq!(filter_join(&a, &f, &g).unwrap().members(), &set(&a, &["a", "b", "c", "1"]));
        assert_eq!(filter_join(&a, &f, &Filter::unit(&a)).unwrap(), f);
        assert_eq!(filter_meet(&f, &Filter::whole(&a)).unwrap(), f);
        let other = Filter::unit(&chain(3).unwrap());
        assert_eq!(filter_meet(&f, &other), Err(Error::HostMismatch(5, 3)));
        assert!(matches!(Filter::new(&a, set(&a, &["b", "c", "1"])), Err(Error::NotAFilter(_))));
    }
}
